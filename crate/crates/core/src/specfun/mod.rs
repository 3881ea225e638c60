//! Special functions: orthogonal polynomials, Bernoulli polynomials, and the
//! Hurwitz zeta function with analytic continuation.
//!
//! # Contents
//!
//! * [`laguerre`] and [`laguerre_deriv`] — Laguerre polynomials Lₙ(x) and their
//!   first derivatives, both by forward recurrence.
//! * [`hermite`] — physicists' Hermite polynomials Hₙ(x).
//! * [`hermite_gaussian`] — the normalized oscillator eigenfunctions
//!   Fₙ(s) = (n! 2ⁿ √π)^(−1/2) e^(−s²/2) Hₙ(s), evaluated by a normalized
//!   recurrence that avoids factorial overflow.
//! * [`gamma_residue`] — residues of Γ at the non-positive integers.
//! * [`bernoulli_number`] / [`bernoulli_poly`] — Bernoulli numbers Bₖ and
//!   polynomials Bₖ(a).
//! * [`zeta`] — Hurwitz zeta ζ(s, a) continued to s < 1 by two independent
//!   methods, plus the pole-residue diagnostic.
//!
//! # Example
//!
//! ```
//! use landau_wigner::specfun::{laguerre, hermite};
//!
//! // L_2(x) = 1 - 2x + x^2/2
//! let x = 0.7;
//! assert!((laguerre(2, x).unwrap() - (1.0 - 2.0 * x + x * x / 2.0)).abs() < 1e-15);
//! // H_3(x) = 8x^3 - 12x
//! assert!((hermite(3, x).unwrap() - (8.0 * x.powi(3) - 12.0 * x)).abs() < 1e-12);
//! ```

mod dd;
pub mod zeta;

pub use zeta::{
    hurwitz_zeta, riemann_zeta, zeta_residue_check, zeta_residue_extrapolated, ZetaMethod,
};

use crate::{Error, Result};

/// Laguerre polynomial Lₙ(x) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1−x) L_k − k L_{k−1}.
///
/// Errors with [`Error::Domain`] when `x` is not finite.
pub fn laguerre(n: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!(
            "laguerre requires finite x, got {x}"
        )));
    }
    Ok(laguerre_assoc(0, n, x))
}

/// First derivative Lₙ′(x), via Lₙ′ = −L⁽¹⁾_{n−1}.
///
/// Returns 0 for n = 0. Errors with [`Error::Domain`] when `x` is not finite.
pub fn laguerre_deriv(n: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!(
            "laguerre_deriv requires finite x, got {x}"
        )));
    }
    if n == 0 {
        return Ok(0.0);
    }
    Ok(-laguerre_assoc(1, n - 1, x))
}

/// Associated Laguerre L⁽ᵅ⁾ₙ(x) for integer α ≥ 0, by the recurrence
/// (k+1) L⁽ᵅ⁾_{k+1} = (2k+1+α−x) L⁽ᵅ⁾_k − (k+α) L⁽ᵅ⁾_{k−1}.
pub(crate) fn laguerre_assoc(alpha: u32, n: u32, x: f64) -> f64 {
    let a = alpha as f64;
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial Hₙ(x), by H_{k+1} = 2x H_k − 2k H_{k−1}.
///
/// Errors with [`Error::Domain`] when `x` is not finite.
pub fn hermite(n: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("hermite requires finite x, got {x}")));
    }
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Normalized harmonic-oscillator eigenfunction
/// Fₙ(s) = (n! 2ⁿ √π)^(−1/2) e^(−s²/2) Hₙ(s).
///
/// Evaluated by the normalized recurrence
/// F_{k+1} = s √(2/(k+1)) F_k − √(k/(k+1)) F_{k−1},
/// which stays bounded for any level, unlike the raw Hermite recurrence.
/// Negative `n` is accepted and evaluates to 0 (the empty component slot in
/// spinor tables).
pub fn hermite_gaussian(n: i32, s: f64) -> f64 {
    if n < 0 {
        return 0.0;
    }
    let f0 = std::f64::consts::PI.powf(-0.25) * (-s * s / 2.0).exp();
    let mut prev = 0.0;
    let mut cur = f0;
    for k in 0..n {
        let kf = k as f64;
        let next = s * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Residue of Γ(z) at z = −n: (−1)ⁿ / n!.
pub fn gamma_residue(n: u32) -> f64 {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut fact = 1.0;
    for k in 2..=n {
        fact *= k as f64;
    }
    sign / fact
}

/// Even Bernoulli numbers B₂ through B₃₂ as exact rationals rendered to `f64`.
/// Index j holds B_{2(j+1)}.
const BERNOULLI_EVEN: [(f64, f64); 16] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
    (-7709321041217.0, 510.0),
];

/// Bernoulli number Bₖ (convention B₁ = −1/2).
///
/// Values through B₃₂ come from an exact rational table; beyond that the
/// defining recurrence Σ_{j<k} C(k+1, j) B_j = −(k+1) B_k is used, which loses
/// accuracy slowly (worst case ~1e-10 relative near k = 60).
pub fn bernoulli_number(k: u32) -> f64 {
    match k {
        0 => 1.0,
        1 => -0.5,
        _ if k % 2 == 1 => 0.0,
        _ if k <= 32 => {
            let (num, den) = BERNOULLI_EVEN[(k / 2 - 1) as usize];
            num / den
        }
        _ => bernoulli_by_recurrence(k),
    }
}

/// Bₖ from the defining recurrence, used past the exact table.
fn bernoulli_by_recurrence(k: u32) -> f64 {
    let mut b = vec![0.0f64; (k + 1) as usize];
    b[0] = 1.0;
    for m in 1..=k as usize {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
        let mut acc = 0.0;
        let mut binom = 1.0; // C(m+1, 0)
        for (j, bj) in b.iter().enumerate().take(m) {
            acc += binom * bj;
            binom *= (m + 1 - j) as f64 / (j + 1) as f64;
        }
        // binom now holds C(m+1, m) = m+1.
        b[m] = -acc / binom;
    }
    b[k as usize]
}

/// Binomial coefficient C(n, k) in `f64`.
pub(crate) fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

/// Bernoulli polynomial Bₖ(a) = Σ_j C(k, j) B_j a^(k−j).
pub fn bernoulli_poly(k: u32, a: f64) -> f64 {
    let mut acc = 0.0;
    for j in 0..=k {
        acc += binomial(k, j) * bernoulli_number(j) * a.powi((k - j) as i32);
    }
    acc
}
