//! Geometric family of level mixtures and its closed-form densities.
//!
//! The family 𝒲(z) = (1 − z) Σₙ zⁿ Wₙ mixes the equal-member block Wₙ of
//! every level with geometric weights, z ∈ [0, 1). The generating function of
//! the Laguerre polynomials collapses the diagonal to elementary closed
//! forms, which [`GaussianClosedForm`] provides as an independent benchmark
//! for the series construction.
//!
//! # Example
//!
//! ```
//! use landau_wigner::spinor_wigner::{gaussian_family, GaussianClosedForm};
//!
//! let w = gaussian_family(0.4).unwrap();
//! let closed = GaussianClosedForm::new(0.4).unwrap();
//! let direct = w.eval(0.7, -0.2)[(1, 1)];
//! assert!((direct - closed.diagonal(0.7, -0.2)[1]).abs() < 1e-12);
//! ```

use super::{add_level_block, zero_entries, StateMeta, WignerMatrix};
use crate::{Error, Result};

/// Relative tail weight left out by the automatic truncation.
const SERIES_TAIL_TOL: f64 = 1e-12;
/// Largest level count the automatic truncation accepts.
const SERIES_MAX_LEVELS: u32 = 200_000;

fn check_z(z: f64) -> Result<()> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!(
            "geometric weight must lie in [0, 1), got {z}"
        )));
    }
    Ok(())
}

/// Geometric level mixture 𝒲(z) truncated automatically so that the omitted
/// tail weight z^(N+1) stays below 1e-12.
///
/// Errors with [`Error::Domain`] for z outside [0, 1) or so close to 1 that
/// the truncation would exceed 200000 levels; call [`gaussian_family_with`]
/// with an explicit cut in that regime.
pub fn gaussian_family(z: f64) -> Result<WignerMatrix> {
    check_z(z)?;
    let n_max = if z == 0.0 {
        0
    } else {
        let needed = (SERIES_TAIL_TOL.ln() / z.ln()).ceil();
        if needed > SERIES_MAX_LEVELS as f64 {
            return Err(Error::Domain(format!(
                "z = {z} needs more than {SERIES_MAX_LEVELS} levels for tail {SERIES_TAIL_TOL:e}; \
                 use gaussian_family_with"
            )));
        }
        needed as u32
    };
    gaussian_family_with(z, n_max)
}

/// Geometric level mixture 𝒲(z) truncated at level `n_max` inclusive. The
/// omitted tail carries weight z^(n_max + 1), so the normalization falls
/// short of 1 by exactly that amount.
///
/// Errors with [`Error::Domain`] for z outside [0, 1).
pub fn gaussian_family_with(z: f64, n_max: u32) -> Result<WignerMatrix> {
    check_z(z)?;
    let mut entries = zero_entries();
    let mut weight = 1.0 - z;
    for n in 0..=n_max {
        add_level_block(&mut entries, n, weight)?;
        weight *= z;
        if weight == 0.0 {
            break;
        }
    }
    let meta = StateMeta {
        descriptor: format!("z={z}"),
        decomposition: None,
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

/// Closed-form diagonal densities and moments of the geometric family,
/// summed through the Laguerre generating function.
#[derive(Clone, Copy, Debug)]
pub struct GaussianClosedForm {
    z: f64,
}

impl GaussianClosedForm {
    /// Validate the geometric weight z ∈ [0, 1).
    pub fn new(z: f64) -> Result<GaussianClosedForm> {
        check_z(z)?;
        Ok(GaussianClosedForm { z })
    }

    /// The geometric weight.
    pub fn z(&self) -> f64 {
        self.z
    }

    /// The four diagonal entries of 𝒲(z) at one phase-space point. The
    /// lower pair is the negative of the upper pair.
    pub fn diagonal(&self, s: f64, kx: f64) -> [f64; 4] {
        let z = self.z;
        let r2 = s * s + kx * kx;
        let pinched = (r2 * (z - 1.0) / (z + 1.0)).exp() / std::f64::consts::PI;
        let plain = (-r2).exp() / std::f64::consts::PI;
        let w11 = 0.25 * (1.0 - z) * z / (1.0 + z) * pinched;
        let w22 = 0.25 * (1.0 - z) * (plain + pinched / (1.0 + z));
        [w11, w22, -w11, -w22]
    }

    /// Phase-space probability density Tr[𝒲 γ⁰] at one point.
    pub fn density(&self, s: f64, kx: f64) -> f64 {
        let d = self.diagonal(s, kx);
        2.0 * (d[0] + d[1])
    }

    /// Second moment ⟨s²⟩ = (1 + z²) / (2 (1 − z)) of the density (the kx
    /// moment is identical by rotational symmetry).
    pub fn second_moment(&self) -> f64 {
        (1.0 + self.z * self.z) / (2.0 * (1.0 - self.z))
    }
}
