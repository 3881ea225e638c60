//! Phase-space basis functions, overlap tables, and quadrature oracles.
//!
//! Every equal-time Wigner matrix in this crate is a finite linear combination
//! of two families of radial basis functions on the dimensionless phase-space
//! plane (s, kₓ), with r² = s² + kₓ²:
//!
//! * 𝓛ₙ(s, kₓ) = (−1)ⁿ (1/π) e^(−r²) Lₙ(2r²), for n ≥ −1 with 𝓛₋₁ ≡ 0,
//! * 𝓜ₙ(s, kₓ) = (−1)ⁿ (1/(2π)) n^(−1/2) e^(−r²) · 4s · Lₙ′(2r²), for n ≥ 1.
//!
//! Under the inner product ⟨f, g⟩ = 2π ∫∫ f g ds dkₓ the families are
//! orthonormal and mutually orthogonal, which turns every quadratic functional
//! (purity, entropies, concurrence integrals) into exact coefficient
//! arithmetic on [`BasisExpansion`] values. The quadrature oracle [`quad2d`]
//! exists to validate that algebra numerically, not to compute with.
//!
//! Total integrals are ∫∫ 𝓛ₙ = 1/(2π) · ⟨𝓛ₙ, 𝓛₀⟩-free: directly,
//! ∫∫ 𝓛ₙ ds dkₓ = 1 for n ≥ 0 and ∫∫ 𝓜ₙ ds dkₓ = 0, so normalization of a
//! state reads off the 𝓛-coefficients alone. Second moments obey
//! ∫∫ s² 𝓛ₙ = (2n+1)/2 (and the same for kₓ² by rotational symmetry), giving
//! closed-form phase-space variances.
//!
//! # Example
//!
//! ```
//! use landau_wigner::phase_space::{BasisExpansion, BasisLabel, eval_l};
//!
//! let mut f = BasisExpansion::zero();
//! f.add_term(BasisLabel::l(0).unwrap(), 0.5);
//! f.add_term(BasisLabel::l(2).unwrap(), -0.25);
//!
//! let direct = 0.5 * eval_l(0, 0.3, -0.4) - 0.25 * eval_l(2, 0.3, -0.4);
//! assert!((f.eval(0.3, -0.4) - direct).abs() < 1e-15);
//! assert!((f.integral() - 0.25).abs() < 1e-15);
//! ```

pub mod kernel;
pub mod quad;

pub use kernel::wigner_kernel_oracle;
pub use quad::{gauss_laguerre, quad2d};

use std::collections::BTreeMap;
use std::fmt;

use crate::specfun::{laguerre, laguerre_deriv};
use crate::{Error, Result};

/// Label of one basis function: `L(n)` for 𝓛ₙ (n ≥ −1, with 𝓛₋₁ ≡ 0) or
/// `M(n)` for 𝓜ₙ (n ≥ 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    /// Diagonal family 𝓛ₙ.
    L(i32),
    /// Off-diagonal family 𝓜ₙ.
    M(i32),
}

impl BasisLabel {
    /// Label for 𝓛ₙ; n must be ≥ −1.
    pub fn l(n: i32) -> Result<BasisLabel> {
        if n < -1 {
            return Err(Error::Domain(format!(
                "L-family index must be >= -1, got {n}"
            )));
        }
        Ok(BasisLabel::L(n))
    }

    /// Label for 𝓜ₙ; n must be ≥ 1.
    pub fn m(n: i32) -> Result<BasisLabel> {
        if n < 1 {
            return Err(Error::Domain(format!(
                "M-family index must be >= 1, got {n}"
            )));
        }
        Ok(BasisLabel::M(n))
    }

    /// True for the identically vanishing placeholder 𝓛₋₁.
    pub fn is_null(self) -> bool {
        matches!(self, BasisLabel::L(-1))
    }

    /// Evaluate the labelled basis function at (s, kₓ).
    pub fn eval(self, s: f64, kx: f64) -> f64 {
        match self {
            BasisLabel::L(n) => eval_l(n, s, kx),
            BasisLabel::M(n) => eval_m(n, s, kx).unwrap_or(0.0),
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::L(n) => write!(f, "L{n}"),
            BasisLabel::M(n) => write!(f, "M{n}"),
        }
    }
}

/// 𝓛ₙ(s, kₓ) = (−1)ⁿ (1/π) e^(−r²) Lₙ(2r²). Indices below 0 evaluate to 0
/// (the placeholder member of the family).
pub fn eval_l(n: i32, s: f64, kx: f64) -> f64 {
    if n < 0 {
        return 0.0;
    }
    let r2 = s * s + kx * kx;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let lag = laguerre_assoc_value(n as u32, 2.0 * r2);
    sign * std::f64::consts::FRAC_1_PI * (-r2).exp() * lag
}

fn laguerre_assoc_value(n: u32, x: f64) -> f64 {
    laguerre(n, x).expect("finite argument by construction")
}

/// 𝓜ₙ(s, kₓ) = (−1)ⁿ (1/(2π)) n^(−1/2) e^(−r²) · 4s · Lₙ′(2r²), defined for
/// n ≥ 1.
///
/// Errors with [`Error::Domain`] for n < 1.
pub fn eval_m(n: i32, s: f64, kx: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "M-family index must be >= 1, got {n}"
        )));
    }
    let r2 = s * s + kx * kx;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let dl = laguerre_deriv(n as u32, 2.0 * r2)?;
    Ok(sign * (0.5 * std::f64::consts::FRAC_1_PI) * (n as f64).sqrt().recip()
        * (-r2).exp()
        * 4.0
        * s
        * dl)
}

/// Exact overlap ⟨a, b⟩ = 2π ∫∫ a b ds dkₓ between basis functions: both
/// families are orthonormal and mutually orthogonal, and any pairing with the
/// null member 𝓛₋₁ vanishes.
pub fn overlap(a: BasisLabel, b: BasisLabel) -> f64 {
    if a.is_null() || b.is_null() {
        return 0.0;
    }
    if a == b {
        1.0
    } else {
        0.0
    }
}

/// Exact total integral ∫∫ f ds dkₓ of a basis function: 1 for 𝓛ₙ with
/// n ≥ 0, and 0 for 𝓛₋₁ and every 𝓜ₙ (odd in s).
pub fn total_integral(a: BasisLabel) -> f64 {
    match a {
        BasisLabel::L(n) if n >= 0 => 1.0,
        _ => 0.0,
    }
}

/// Exact second moment ∫∫ s² f ds dkₓ of a basis function: (2n+1)/2 for 𝓛ₙ
/// with n ≥ 0, and 0 otherwise. By rotational symmetry of the 𝓛 family the
/// kₓ² moment is identical, and the 𝓜 moments vanish by parity.
pub fn second_moment(a: BasisLabel) -> f64 {
    match a {
        BasisLabel::L(n) if n >= 0 => (2.0 * n as f64 + 1.0) / 2.0,
        _ => 0.0,
    }
}

/// ∫∫ e^(αr²) ds dkₓ = −π/α for α < 0.
///
/// Errors with [`Error::Domain`] for α ≥ 0 (divergent) or non-finite α.
pub fn gauss_integral(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha >= 0.0 {
        return Err(Error::Domain(format!(
            "gauss_integral requires alpha < 0, got {alpha}"
        )));
    }
    Ok(-std::f64::consts::PI / alpha)
}

/// A finite real linear combination of basis functions, stored sparsely with
/// deterministic (ordered) iteration. Exact-zero coefficients and the null
/// label 𝓛₋₁ are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BasisExpansion {
    terms: BTreeMap<BasisLabel, f64>,
}

impl BasisExpansion {
    /// The zero function.
    pub fn zero() -> BasisExpansion {
        BasisExpansion {
            terms: BTreeMap::new(),
        }
    }

    /// Single-term expansion `coef · basis(label)`.
    pub fn term(label: BasisLabel, coef: f64) -> BasisExpansion {
        let mut e = BasisExpansion::zero();
        e.add_term(label, coef);
        e
    }

    /// Add `coef · basis(label)` in place.
    pub fn add_term(&mut self, label: BasisLabel, coef: f64) {
        if label.is_null() || coef == 0.0 {
            return;
        }
        let slot = self.terms.entry(label).or_insert(0.0);
        *slot += coef;
        if *slot == 0.0 {
            self.terms.remove(&label);
        }
    }

    /// Add `factor · other` in place.
    pub fn add_scaled(&mut self, other: &BasisExpansion, factor: f64) {
        for (&label, &coef) in &other.terms {
            self.add_term(label, factor * coef);
        }
    }

    /// A new expansion equal to `factor · self`.
    pub fn scaled(&self, factor: f64) -> BasisExpansion {
        let mut e = BasisExpansion::zero();
        e.add_scaled(self, factor);
        e
    }

    /// Coefficient of `label` (0 when absent).
    pub fn coef(&self, label: BasisLabel) -> f64 {
        self.terms.get(&label).copied().unwrap_or(0.0)
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when no terms are stored.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate over (label, coefficient) pairs in label order.
    pub fn iter(&self) -> impl Iterator<Item = (BasisLabel, f64)> + '_ {
        self.terms.iter().map(|(&l, &c)| (l, c))
    }

    /// Evaluate the combination at (s, kₓ). The Laguerre recurrences run once
    /// up to the highest stored index, so long truncated series evaluate in
    /// linear rather than quadratic time.
    pub fn eval(&self, s: f64, kx: f64) -> f64 {
        let max_l = self
            .terms
            .keys()
            .filter_map(|l| match l {
                BasisLabel::L(n) => Some(*n),
                _ => None,
            })
            .max();
        let max_m = self
            .terms
            .keys()
            .filter_map(|l| match l {
                BasisLabel::M(n) => Some(*n),
                _ => None,
            })
            .max();

        let r2 = s * s + kx * kx;
        let x = 2.0 * r2;
        let gauss = (-r2).exp();
        let mut acc = 0.0;

        if let Some(top) = max_l {
            // L_k(x) by forward recurrence, collecting stored coefficients.
            let mut prev = 0.0;
            let mut cur = 1.0;
            for k in 0..=top {
                let c = self.coef(BasisLabel::L(k));
                if c != 0.0 {
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    acc += c * sign * std::f64::consts::FRAC_1_PI * gauss * cur;
                }
                let kf = k as f64;
                let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
                prev = cur;
                cur = next;
            }
        }

        if let Some(top) = max_m {
            // L_n'(x) = -L^{(1)}_{n-1}(x); run the alpha = 1 recurrence.
            let mut prev = 0.0;
            let mut cur = 1.0; // L^{(1)}_0
            for k in 1..=top {
                let dl = -cur; // L_k'(x)
                let c = self.coef(BasisLabel::M(k));
                if c != 0.0 {
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    acc += c
                        * sign
                        * (0.5 * std::f64::consts::FRAC_1_PI)
                        * (k as f64).sqrt().recip()
                        * gauss
                        * 4.0
                        * s
                        * dl;
                }
                let kf = k as f64; // advance L^{(1)}_{k-1} -> L^{(1)}_k
                let next = ((2.0 * kf - x) * cur - kf * prev) / kf;
                prev = cur;
                cur = next;
            }
        }
        acc
    }

    /// Exact total integral ∫∫ f ds dkₓ (sum of 𝓛-coefficients with n ≥ 0).
    pub fn integral(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&l, &c)| c * total_integral(l))
            .sum()
    }

    /// Exact second moment ∫∫ s² f ds dkₓ.
    pub fn second_moment(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&l, &c)| c * second_moment(l))
            .sum()
    }

    /// Exact inner product ⟨self, other⟩ = 2π ∫∫ self · other ds dkₓ, using
    /// orthonormality of the basis.
    pub fn overlap(&self, other: &BasisExpansion) -> f64 {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .map(|(&l, &c)| c * large.coef(l))
            .sum()
    }
}
