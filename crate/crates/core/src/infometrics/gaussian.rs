//! Closed-form information quantifiers of the geometric level family.
//!
//! For 𝒲(z) every quantifier sums in closed form over the geometric
//! weights, giving an independent benchmark for the coefficient pipeline:
//!
//! * P(z) = (1 − z)(2 − z²) / (4(1 + z)),
//! * I_ps(z) = (z/2)(2 + z − z²),
//! * I_sp(z) = (2 + 2z − z²)/4,
//! * M(z) = (3z² + z − z⁴) / (2 + 2z),
//! * ρ_SP(z) = diag(z, 2 − z, z, 2 − z)/4,
//! * ensemble C²(z) = z/2 at κ = 0, from the per-level value n/(2n) = 1/2.

use crate::{Error, Result};

/// Closed-form quantifiers of 𝒲(z).
#[derive(Clone, Copy, Debug)]
pub struct GaussianInfo {
    /// Total purity P.
    pub purity: f64,
    /// Phase-space information deficit I_ps.
    pub entropy_ps: f64,
    /// Spin-parity information deficit I_sp.
    pub entropy_sp: f64,
    /// Correlation measure M.
    pub mutual_info: f64,
    /// Diagonal of the reduced spin-parity matrix.
    pub reduced_diagonal: [f64; 4],
    /// Ensemble squared concurrence of the underlying massless mixture.
    pub concurrence_sq: f64,
}

/// Evaluate the closed forms at geometric weight z ∈ [0, 1).
///
/// Errors with [`Error::Domain`] outside that interval.
pub fn gaussian_info(z: f64) -> Result<GaussianInfo> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!(
            "geometric weight must lie in [0, 1), got {z}"
        )));
    }
    Ok(GaussianInfo {
        purity: (1.0 - z) * (2.0 - z * z) / (4.0 * (1.0 + z)),
        entropy_ps: 0.5 * z * (2.0 + z - z * z),
        entropy_sp: 0.25 * (2.0 + 2.0 * z - z * z),
        mutual_info: (3.0 * z * z + z - z.powi(4)) / (2.0 + 2.0 * z),
        reduced_diagonal: [0.25 * z, 0.25 * (2.0 - z), 0.25 * z, 0.25 * (2.0 - z)],
        concurrence_sq: 0.5 * z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infometrics::{entropy_ps, entropy_sp, purity, reduced_spin_parity};
    use crate::spinor_wigner::gaussian_family;
    use approx::assert_abs_diff_eq;

    #[test]
    fn closed_forms_satisfy_the_combination_rule() {
        for k in 0..20 {
            let z = k as f64 / 20.0;
            let g = gaussian_info(z).unwrap();
            assert_abs_diff_eq!(
                g.mutual_info,
                g.entropy_ps + g.entropy_sp - (1.0 - g.purity),
                epsilon = 1e-14
            );
            let trace: f64 = g.reduced_diagonal.iter().sum();
            assert_abs_diff_eq!(trace, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn endpoint_values_are_exact() {
        let g = gaussian_info(0.0).unwrap();
        assert_abs_diff_eq!(g.purity, 0.5);
        assert_abs_diff_eq!(g.entropy_ps, 0.0);
        assert_abs_diff_eq!(g.entropy_sp, 0.5);
        assert_abs_diff_eq!(g.mutual_info, 0.0);
        assert_abs_diff_eq!(g.concurrence_sq, 0.0);
        assert!(gaussian_info(1.0).is_err());
        assert!(gaussian_info(-0.2).is_err());
    }

    #[test]
    fn coefficient_pipeline_reproduces_the_closed_forms() {
        for &z in &[0.0, 0.2, 0.5, 0.8, 0.95] {
            let w = gaussian_family(z).unwrap();
            let g = gaussian_info(z).unwrap();
            assert_abs_diff_eq!(purity(&w), g.purity, epsilon = 1e-11);
            assert_abs_diff_eq!(entropy_ps(&w), g.entropy_ps, epsilon = 1e-11);
            assert_abs_diff_eq!(entropy_sp(&w).unwrap(), g.entropy_sp, epsilon = 1e-11);
            let rho = reduced_spin_parity(&w).unwrap();
            for i in 0..4 {
                assert_abs_diff_eq!(rho[(i, i)], g.reduced_diagonal[i], epsilon = 1e-11);
                for j in 0..4 {
                    if i != j {
                        assert_abs_diff_eq!(rho[(i, j)], 0.0, epsilon = 1e-12);
                    }
                }
            }
        }
    }
}
