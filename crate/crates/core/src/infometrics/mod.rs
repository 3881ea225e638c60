//! Information quantifiers of equal-time Wigner matrices.
//!
//! All quantifiers here are quadratic (linear-entropy) functionals built
//! from three purities of one state W:
//!
//! * total purity P = 2π ∬ Tr[γ⁰ W γ⁰ W],
//! * phase-space information deficit I_ps = 1 − 2π ∬ n², where
//!   n = Tr[W γ⁰] is the probability density,
//! * spin-parity information deficit I_sp = 1 − Tr[ρ_SP²], where
//!   ρ_SP = ∬ W γ⁰ is the reduced 4×4 spin-parity density matrix.
//!
//! The correlation measure combines them as M = I_ps + I_sp − (1 − P),
//! the linear-entropy analogue of a mutual information between the
//! phase-space and spin-parity factors. For the exactly constructed states
//! every integral reduces to coefficient arithmetic on the orthonormal
//! phase-space basis, so these evaluate without quadrature.
//!
//! Two-qubit entanglement quantifiers (spin-parity concurrence functionals,
//! the Wootters concurrence of reduced density matrices, and the
//! entanglement of formation) live in [`concurrence`].
//!
//! # Example
//!
//! ```
//! use landau_wigner::spinor_wigner::{OneParticleParams, Parity, Spin, pure_state};
//! use landau_wigner::infometrics::info_report;
//!
//! let params = OneParticleParams::new(1, 1.0, 0.5, 1.0).unwrap();
//! let w = pure_state(&params, Parity::One, Spin::Plus).unwrap();
//! let report = info_report(&w).unwrap();
//! assert!((report.purity - 1.0).abs() < 1e-12);
//! assert!((report.mutual_info - (report.entropy_ps + report.entropy_sp)).abs() < 1e-12);
//! ```

pub mod concurrence;
mod gaussian;

pub use concurrence::{
    concurrence_sq_ensemble, concurrence_sq_formula, concurrence_sq_pure, concurrence_sq_recorded,
    eof_from_concurrence, flip_trace_sq, wootters_concurrence,
};
pub use gaussian::{gaussian_info, GaussianInfo};

use nalgebra::Matrix4;

use crate::spinor_wigner::{WignerMatrix, GAMMA0};
use crate::{Error, Result};

/// Trace inner product of two Wigner matrices: 2π ∬ Tr[γ⁰ V γ⁰ W],
/// evaluated exactly on the basis coefficients.
pub fn trace_inner_product(v: &WignerMatrix, w: &WignerMatrix) -> f64 {
    let mut acc = 0.0;
    for (i, gi) in GAMMA0.iter().enumerate() {
        for (j, gj) in GAMMA0.iter().enumerate() {
            acc += gi * gj * v.entry(i, j).overlap(w.entry(j, i));
        }
    }
    acc
}

/// Total purity P = 2π ∬ Tr[γ⁰ W γ⁰ W].
pub fn purity(w: &WignerMatrix) -> f64 {
    trace_inner_product(w, w)
}

/// Reduced spin-parity density matrix ρ_SP = ∬ W γ⁰.
///
/// Errors with [`Error::Inconsistent`] when the trace deviates from 1 by
/// more than 1e-10, which signals an unnormalized or non-state input.
pub fn reduced_spin_parity(w: &WignerMatrix) -> Result<Matrix4<f64>> {
    let rho = Matrix4::from_fn(|i, j| GAMMA0[j] * w.entry(i, j).integral());
    let trace = rho.trace();
    if (trace - 1.0).abs() > 1e-10 {
        return Err(Error::Inconsistent(format!(
            "reduced spin-parity trace {trace} deviates from 1 for `{}`",
            w.meta().descriptor
        )));
    }
    Ok(rho)
}

/// Phase-space information deficit I_ps = 1 − 2π ∬ n² of the probability
/// density n = Tr[W γ⁰].
pub fn entropy_ps(w: &WignerMatrix) -> f64 {
    let density = w.trace_density();
    1.0 - density.overlap(&density)
}

/// Spin-parity information deficit I_sp = 1 − Tr[ρ_SP²].
///
/// Errors as [`reduced_spin_parity`] does.
pub fn entropy_sp(w: &WignerMatrix) -> Result<f64> {
    let rho = reduced_spin_parity(w)?;
    Ok(1.0 - (rho * rho).trace())
}

/// Correlation measure M = I_ps + I_sp − (1 − P).
///
/// Errors as [`reduced_spin_parity`] does.
pub fn mutual_info(w: &WignerMatrix) -> Result<f64> {
    Ok(info_report(w)?.mutual_info)
}

/// All linear-entropy quantifiers of one state, evaluated together.
#[derive(Clone, Debug)]
pub struct InfoReport {
    /// Descriptor of the state the report belongs to.
    pub descriptor: String,
    /// Total purity P.
    pub purity: f64,
    /// Phase-space information deficit I_ps.
    pub entropy_ps: f64,
    /// Spin-parity information deficit I_sp.
    pub entropy_sp: f64,
    /// Correlation measure M = I_ps + I_sp − (1 − P).
    pub mutual_info: f64,
    /// Ensemble spin-parity concurrence squared, when the state records a
    /// pure decomposition; `None` otherwise.
    pub concurrence_sq: Option<f64>,
}

/// Evaluate every quantifier of one state.
///
/// Errors as [`reduced_spin_parity`] does.
pub fn info_report(w: &WignerMatrix) -> Result<InfoReport> {
    let purity = purity(w);
    let entropy_ps = entropy_ps(w);
    let entropy_sp = entropy_sp(w)?;
    Ok(InfoReport {
        descriptor: w.meta().descriptor.clone(),
        purity,
        entropy_ps,
        entropy_sp,
        mutual_info: entropy_ps + entropy_sp - (1.0 - purity),
        concurrence_sq: concurrence_sq_recorded(w).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor_wigner::{
        maximally_mixed, pure_state, spin_interference, spin_mixture, superposition,
        OneParticleParams, Parity, Spin,
    };
    use approx::assert_abs_diff_eq;

    fn params(n: u32) -> OneParticleParams {
        OneParticleParams::new(n, 1.0, 0.5, 1.0).unwrap()
    }

    #[test]
    fn pure_states_have_unit_purity_and_orthogonal_cross_products() {
        let p = params(2);
        let members: Vec<_> = [
            (Parity::One, Spin::Plus),
            (Parity::One, Spin::Minus),
            (Parity::Two, Spin::Plus),
            (Parity::Two, Spin::Minus),
        ]
        .iter()
        .map(|&(r, s)| pure_state(&p, r, s).unwrap())
        .collect();
        for (i, v) in members.iter().enumerate() {
            for (j, w) in members.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(trace_inner_product(v, w), expected, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn interference_term_has_norm_two_and_is_orthogonal_to_members() {
        let p = params(1);
        let omega = spin_interference(&p).unwrap();
        assert_abs_diff_eq!(trace_inner_product(&omega, &omega), 2.0, epsilon = 1e-13);
        for (r, s) in [(Parity::One, Spin::Plus), (Parity::One, Spin::Minus)] {
            let w = pure_state(&p, r, s).unwrap();
            assert_abs_diff_eq!(trace_inner_product(&omega, &w), 0.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn superpositions_stay_pure_for_every_angle() {
        let p = params(3);
        for &theta in &[0.0, 0.4, std::f64::consts::FRAC_PI_4, 1.3] {
            let w = superposition(&p, theta).unwrap();
            assert_abs_diff_eq!(purity(&w), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn mixture_purity_follows_weight_arithmetic() {
        let p = params(1);
        for &phi in &[0.3, 0.8, std::f64::consts::FRAC_PI_4] {
            let w = spin_mixture(&p, phi).unwrap();
            let (sin, cos) = phi.sin_cos();
            let expected = (sin * sin).powi(2) + (cos * cos).powi(2);
            assert_abs_diff_eq!(purity(&w), expected, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(
            purity(&maximally_mixed(1).unwrap()),
            0.25,
            epsilon = 1e-13
        );
    }

    #[test]
    fn reduced_matrix_of_a_pure_member_matches_component_arithmetic() {
        let p = params(2);
        let (eta, a, b) = (p.eta_n(), p.a_n(), p.b_n());
        let rho = reduced_spin_parity(&pure_state(&p, Parity::One, Spin::Plus).unwrap()).unwrap();
        assert_abs_diff_eq!(rho[(0, 0)], eta, epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(2, 2)], eta * a * a, epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(3, 3)], eta * b * b, epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(0, 2)], eta * a, epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(2, 0)], eta * a, epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(0, 3)], 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn reduced_matrix_rejects_non_states() {
        let omega = spin_interference(&params(1)).unwrap();
        assert!(matches!(
            reduced_spin_parity(&omega),
            Err(crate::Error::Inconsistent(_))
        ));
    }

    #[test]
    fn report_fields_satisfy_the_combination_rule() {
        let p = params(1);
        for w in [
            pure_state(&p, Parity::Two, Spin::Minus).unwrap(),
            superposition(&p, 0.9).unwrap(),
            spin_mixture(&p, 0.6).unwrap(),
            maximally_mixed(2).unwrap(),
        ] {
            let r = info_report(&w).unwrap();
            assert_abs_diff_eq!(
                r.mutual_info,
                r.entropy_ps + r.entropy_sp - (1.0 - r.purity),
                epsilon = 1e-14
            );
            assert!(r.purity > 0.0 && r.purity <= 1.0 + 1e-12);
            assert!(r.entropy_ps >= -1e-12 && r.entropy_sp >= -1e-12);
        }
    }

    #[test]
    fn recorded_concurrence_appears_only_with_a_decomposition() {
        let p = params(1);
        let pure = info_report(&pure_state(&p, Parity::One, Spin::Plus).unwrap()).unwrap();
        assert!(pure.concurrence_sq.is_some());
        let anon = info_report(&maximally_mixed(1).unwrap()).unwrap();
        assert!(anon.concurrence_sq.is_none());
    }
}
