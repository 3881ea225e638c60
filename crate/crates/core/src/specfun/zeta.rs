//! Hurwitz zeta ζ(s, a) = Σ_{k≥0} (a+k)^(−s), analytically continued to s < 1.
//!
//! Two independent methods are provided and cross-checked in tests:
//!
//! * **Euler–Maclaurin** (production path): a head sum to a shifted base A,
//!   the integral and boundary terms A^(1−s)/(s−1) + A^(−s)/2, and Bernoulli
//!   corrections B₂ⱼ/(2j)! (s)₂ⱼ₋₁ A^(−s−2j+1). For non-positive integer s
//!   down to −30 the correction series terminates and the result is the exact
//!   finite Bernoulli-polynomial form, evaluated without any shift.
//! * **Globally convergent series** (oracle path): the binomial double sum
//!   ζ(s, a) = 1/(s−1) Σ_n 1/(n+1) Σ_k (−1)^k C(n,k) (a+k)^(1−s), evaluated in
//!   double-double arithmetic with exact double-double nodes a + k, because
//!   the alternating inner sums cancel to ~16 digits before the answer
//!   emerges and even a half-ulp f64 rounding of a node is amplified by
//!   C(n, k). The result is certified: the call fails with a structured
//!   error instead of returning a value whose roundoff bound exceeds the
//!   configured tolerance.
//!
//! The continuation feeds the thermodynamic expansions; the simple pole at
//! s = 1 with residue 1 is exposed as a diagnostic through
//! [`zeta_residue_check`] and its Richardson extrapolation.
//!
//! # Example
//!
//! ```
//! use landau_wigner::specfun::{hurwitz_zeta, ZetaMethod};
//!
//! // zeta(0, a) = 1/2 - a
//! let v = hurwitz_zeta(0.0, 2.0, &ZetaMethod::euler_maclaurin()).unwrap();
//! assert!((v - (-1.5)).abs() < 1e-12);
//!
//! // Both continuations agree away from the pole.
//! let em = hurwitz_zeta(-1.5, 0.5, &ZetaMethod::euler_maclaurin()).unwrap();
//! let series = hurwitz_zeta(-1.5, 0.5, &ZetaMethod::hasse_series()).unwrap();
//! assert!((em - series).abs() < 1e-9);
//! ```

use super::dd::Dd;
use super::bernoulli_number;
use crate::{Error, Result};

/// Which continuation backend evaluates ζ(s, a).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaKind {
    /// Euler–Maclaurin summation with Bernoulli corrections (production).
    EulerMaclaurin,
    /// Globally convergent binomial series in double-double arithmetic
    /// (oracle; slower, no asymptotic-truncation error).
    HasseSeries,
}

/// Evaluation policy for [`hurwitz_zeta`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaMethod {
    /// Backend selection.
    pub kind: ZetaKind,
    /// Head-term budget: cap on the directly summed head for Euler–Maclaurin
    /// (the head stops early once the shifted base is large enough), and the
    /// outer-series cap for the binomial series. Must be ≥ 1.
    pub truncation: usize,
    /// Target accuracy relative to max(|value|, 1). Must be > 0. The binomial
    /// series certifies it: the call fails rather than return a value whose
    /// estimated error exceeds this bound.
    pub tolerance: f64,
}

impl ZetaMethod {
    /// Euler–Maclaurin defaults: head ≥ 16 terms, 1e-12 target.
    pub fn euler_maclaurin() -> Self {
        ZetaMethod {
            kind: ZetaKind::EulerMaclaurin,
            truncation: 16,
            tolerance: 1e-12,
        }
    }

    /// Binomial-series defaults: up to 60 outer terms, certified 1e-10.
    pub fn hasse_series() -> Self {
        ZetaMethod {
            kind: ZetaKind::HasseSeries,
            truncation: 60,
            tolerance: 1e-10,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.truncation < 1 {
            return Err(Error::Domain(
                "zeta method truncation must be at least 1".into(),
            ));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Domain(format!(
                "zeta method tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// Hurwitz zeta ζ(s, a), continued to all real s ≠ 1.
///
/// Errors: [`Error::Pole`] at s = 1, [`Error::Domain`] for a ≤ 0, non-finite
/// arguments, or an invalid method configuration. The series oracle also
/// reports [`Error::Numerical`] when its double-double roundoff floor sits
/// above the configured tolerance (deeply negative non-integer s).
pub fn hurwitz_zeta(s: f64, a: f64, cfg: &ZetaMethod) -> Result<f64> {
    cfg.validate()?;
    if !s.is_finite() || !a.is_finite() {
        return Err(Error::Domain(format!(
            "hurwitz_zeta requires finite arguments, got s = {s}, a = {a}"
        )));
    }
    if s == 1.0 {
        return Err(Error::Pole(format!(
            "hurwitz_zeta has a simple pole at s = 1 (a = {a})"
        )));
    }
    if a <= 0.0 {
        return Err(Error::Domain(format!(
            "hurwitz_zeta requires a > 0, got a = {a}"
        )));
    }
    match cfg.kind {
        ZetaKind::EulerMaclaurin => Ok(hurwitz_em(s, a, cfg.truncation)),
        ZetaKind::HasseSeries => hurwitz_hasse(s, a, cfg.truncation, cfg.tolerance),
    }
}

/// Riemann zeta ζ(s) = ζ(s, 1) on the production path.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    hurwitz_zeta(s, 1.0, &ZetaMethod::euler_maclaurin())
}

fn factorial(n: u32) -> f64 {
    let mut acc = 1.0;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}

/// Euler–Maclaurin evaluation. `head_budget` is the minimum number of directly
/// summed head terms on the generic path.
fn hurwitz_em(s: f64, a: f64, head_budget: usize) -> f64 {
    // For non-positive integer s >= -30 the correction series terminates
    // (the Pochhammer factor hits zero within the Bernoulli table), so the
    // unshifted formula is a finite polynomial identity: evaluate it exactly.
    let exact_integer = s <= 0.0 && s == s.round() && s >= -30.0;
    let n_head = if exact_integer {
        0
    } else {
        // Shift the base to ~9 so the correction series converges, but no
        // further: for s < 0 every extra head term grows like (a+k)^|s| and
        // the cancellation against the integral term amplifies f64 roundoff.
        let needed = (9.0 - a).ceil().max(0.0) as usize;
        needed.min(head_budget).max(1)
    };

    let mut head = 0.0;
    for k in 0..n_head {
        head += (a + k as f64).powf(-s);
    }
    let base = a + n_head as f64;
    let mut acc = head + base.powf(1.0 - s) / (s - 1.0) + 0.5 * base.powf(-s);

    // Correction series B_{2j}/(2j)! (s)_{2j-1} base^{-s-2j+1}. On the generic
    // path this is asymptotic: stop at the smallest term. On the exact-integer
    // path it terminates by itself and every term must be kept.
    let mut poch = s; // (s)_1
    let mut prev_mag = f64::INFINITY;
    for j in 1..=16u32 {
        let term = bernoulli_number(2 * j) / factorial(2 * j)
            * poch
            * base.powf(-s - 2.0 * j as f64 + 1.0);
        if term == 0.0 {
            break;
        }
        let mag = term.abs();
        if !exact_integer {
            if mag > prev_mag {
                break;
            }
            prev_mag = mag;
        }
        acc += term;
        if !exact_integer && mag < 1e-17 * acc.abs().max(1.0) {
            break;
        }
        poch *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
    }
    acc
}

/// Globally convergent binomial series in double-double arithmetic.
///
/// `nmax` caps the outer series. `tol` is certified: the value is returned
/// only when the roundoff floor plus the truncation tail stays within
/// `tol * max(|value|, 1)`; otherwise the call fails with [`Error::Numerical`]
/// carrying the best estimate and its error bound.
fn hurwitz_hasse(s: f64, a: f64, nmax: usize, tol: f64) -> Result<f64> {
    // Per-term roundoff of the double-double inner sums.
    const DD_EPS: f64 = 1e-31;

    // zeta(s, a) = sum_{j < shift} (a+j)^(-s) + zeta(s, a + shift). A base
    // near 12 makes the outer terms decay like n^(-base); pushing it higher
    // buys nothing, because the binomial peak C(n, n/2) (base + n/2)^(1-s)
    // grows correspondingly and the roundoff floor rises to meet the terms.
    let shift = (12.0 - a).ceil().max(0.0) as usize;

    // Nodes and head stay in double-double throughout. The inner sums
    // difference f(a+k) down to a tiny remainder of the peak term, so a
    // half-ulp f64 rounding of a node (a kink wherever a + k crosses a
    // binade) is amplified by C(n, k) and buries the answer long before the
    // outer series converges.
    let node = |k: usize| Dd::from_f64(a).add(Dd::from_f64(k as f64));
    let mut head = Dd::ZERO;
    for j in 0..shift {
        head = head.add(node(j).powf(-s));
    }
    let fk: Vec<Dd> = (0..=nmax).map(|k| node(shift + k).powf(1.0 - s)).collect();

    let s1 = s - 1.0;
    let head_scaled = head.mul_f64(s1);
    let mut total = Dd::ZERO;
    let mut noise = 0.0_f64;
    let mut last = f64::INFINITY;
    let mut small_run = 0;
    let mut converged = false;
    for n in 0..=nmax {
        let mut inner = Dd::ZERO;
        let mut binom = Dd::ONE;
        let mut peak = 0.0_f64;
        for (k, f) in fk.iter().enumerate().take(n + 1) {
            let term = binom.mul(*f);
            peak = peak.max(term.abs());
            inner = if k % 2 == 0 {
                inner.add(term)
            } else {
                inner.sub(term)
            };
            binom = binom.mul_f64((n - k) as f64).div_f64(k as f64 + 1.0);
        }
        let t = inner.div_f64(n as f64 + 1.0);
        total = total.add(t);
        // Each of the n+1 additions in the inner sum can round at the size
        // of its running partial, which reaches ~peak, so after the final
        // division by n+1 the roundoff of t is bounded by peak * eps.
        let floor = peak * DD_EPS;
        noise += floor;
        last = t.abs();
        // Smallness is measured on the scale of the final value
        // head + total/(s-1): for s << 0 the head cancels most of the
        // shifted sum, so |total| alone overstates the scale by orders of
        // magnitude. Terms at the roundoff floor carry no signal and count
        // as small regardless.
        let scale = head_scaled.add(total).abs();
        let thr = (tol / 20.0 * scale).max(4.0 * floor);
        if last < thr {
            small_run += 1;
            if small_run >= 3 {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }

    let value = head.add(total.div_f64(s1)).to_f64();
    // Past the stopping point the exact terms keep shrinking geometrically,
    // and terms already at the roundoff floor are pure noise of size ~floor,
    // so 3 |t_last| covers the truncated tail in both regimes.
    let bound = (noise + 3.0 * last) / s1.abs();
    if !converged {
        return Err(Error::Numerical {
            context: format!(
                "binomial series for zeta({s}, {a}): not converged within {nmax} outer terms"
            ),
            best_estimate: value,
            error_bound: bound,
        });
    }
    if bound > tol * value.abs().max(1.0) {
        return Err(Error::Numerical {
            context: format!(
                "binomial series for zeta({s}, {a}): roundoff floor above the requested tolerance {tol:e}"
            ),
            best_estimate: value,
            error_bound: bound,
        });
    }
    Ok(value)
}

/// Pole-residue diagnostic: eps · ζ(1 + eps, a), which tends to the residue 1
/// as eps → 0⁺.
///
/// Errors with [`Error::Domain`] unless 0 < eps < 0.5 and a > 0.
pub fn zeta_residue_check(a: f64, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::Domain(format!(
            "zeta_residue_check requires 0 < eps < 0.5, got {eps}"
        )));
    }
    let z = hurwitz_zeta(1.0 + eps, a, &ZetaMethod::euler_maclaurin())?;
    Ok(eps * z)
}

/// Richardson extrapolation of [`zeta_residue_check`] to eps → 0, using a
/// quadratic fit through eps ∈ {1e-2, 1e-3, 1e-4}. Converges to the residue 1
/// to well below 1e-6 for any a > 0.
pub fn zeta_residue_extrapolated(a: f64) -> Result<f64> {
    let xs = [1e-2, 1e-3, 1e-4];
    let mut ys = [0.0; 3];
    for (y, &x) in ys.iter_mut().zip(xs.iter()) {
        *y = zeta_residue_check(a, x)?;
    }
    // Quadratic Lagrange interpolation evaluated at eps = 0.
    let mut acc = 0.0;
    for i in 0..3 {
        let mut weight = 1.0;
        for j in 0..3 {
            if i != j {
                weight *= (0.0 - xs[j]) / (xs[i] - xs[j]);
            }
        }
        acc += weight * ys[i];
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bernoulli_poly;
    use approx::assert_abs_diff_eq;

    fn em() -> ZetaMethod {
        ZetaMethod::euler_maclaurin()
    }

    fn series() -> ZetaMethod {
        ZetaMethod::hasse_series()
    }

    // ==================== Known values ====================

    #[test]
    fn zeta_zero_is_half_minus_a() {
        for &a in &[0.3, 0.5, 1.0, 2.0, 7.5] {
            for cfg in [em(), series()] {
                let v = hurwitz_zeta(0.0, a, &cfg).unwrap();
                assert_abs_diff_eq!(v, 0.5 - a, epsilon = 1e-11);
            }
        }
    }

    #[test]
    fn riemann_values_match_references() {
        // zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(3) Apery, zeta(1/2),
        // zeta(-1/2), zeta(-1) = -1/12.
        let pi = std::f64::consts::PI;
        let cases = [
            (2.0, pi * pi / 6.0),
            (4.0, pi.powi(4) / 90.0),
            (3.0, 1.2020569031595943),
            (0.5, -1.4603545088095868),
            (-0.5, -0.2078862249773546),
            (-1.0, -1.0 / 12.0),
        ];
        for &(s, want) in &cases {
            for cfg in [em(), series()] {
                let got = hurwitz_zeta(s, 1.0, &cfg).unwrap();
                assert!(
                    (got - want).abs() <= 1e-10 * want.abs().max(1.0),
                    "s = {s}, {:?}: {got} vs {want}",
                    cfg.kind
                );
            }
        }
    }

    #[test]
    fn negative_even_arguments_reduce_to_bernoulli_polynomials() {
        // zeta(-2k, a) = -B_{2k+1}(a)/(2k+1).
        for k in 1..=5u32 {
            for &a in &[0.5, 1.0, 2.0] {
                let want = -bernoulli_poly(2 * k + 1, a) / (2.0 * k as f64 + 1.0);
                for cfg in [em(), series()] {
                    let got = hurwitz_zeta(-2.0 * k as f64, a, &cfg).unwrap();
                    assert!(
                        (got - want).abs() <= 1e-10 * want.abs().max(1.0),
                        "k={k} a={a} {:?}: {got} vs {want}",
                        cfg.kind
                    );
                }
            }
        }
    }

    #[test]
    fn negative_odd_integers_match_bernoulli_form() {
        // zeta(-q, a) = -B_{q+1}(a)/(q+1) for any non-negative integer q.
        for q in [1u32, 3, 5, 7, 9, 11, 15, 21] {
            for &a in &[0.5, 1.0, 2.0, 4.25] {
                let want = -bernoulli_poly(q + 1, a) / (q as f64 + 1.0);
                let got = hurwitz_zeta(-(q as f64), a, &em()).unwrap();
                assert!(
                    (got - want).abs() <= 1e-9 * want.abs().max(1.0),
                    "q={q} a={a}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn shift_identity_holds() {
        // zeta(s, a) - zeta(s, a+1) = a^{-s}.
        for &s in &[-5.5, -2.3, -0.25, 0.5, 2.5] {
            for &a in &[0.5, 1.0, 3.7] {
                for cfg in [em(), series()] {
                    let lhs = hurwitz_zeta(s, a, &cfg).unwrap()
                        - hurwitz_zeta(s, a + 1.0, &cfg).unwrap();
                    let rhs = a.powf(-s);
                    // The difference doubles the head-cancellation noise of a
                    // single Euler-Maclaurin call, hence the 1e-9 floor.
                    assert!(
                        (lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0),
                        "s={s} a={a} {:?}: {lhs} vs {rhs}",
                        cfg.kind
                    );
                }
            }
        }
    }

    // ==================== Dual-method agreement ====================

    #[test]
    fn methods_agree_on_continuation_grid() {
        let mut s = -6.0;
        while s <= -0.25 + 1e-12 {
            for &a in &[0.5, 1.0, 2.0, 10.0] {
                let v1 = hurwitz_zeta(s, a, &em()).unwrap();
                let v2 = hurwitz_zeta(s, a, &series()).unwrap();
                assert!(
                    (v1 - v2).abs() <= 1e-8 * v1.abs().max(1.0),
                    "s={s} a={a}: em {v1} vs series {v2}"
                );
            }
            s += 0.25;
        }
    }

    #[test]
    fn methods_agree_within_thermal_weighting_at_deep_arguments() {
        // At deeply negative non-integer s both methods lose absolute
        // accuracy: the f64 Euler-Maclaurin path to head cancellation, the
        // binomial series to its double-double roundoff floor. Where the
        // series cannot certify its default tolerance it still reports an
        // honest best estimate with a bound; the thermodynamic series
        // weights zeta(-(m+1)/2, a) by mu^m/m!, which crushes the residual
        // disagreement far below the ~1e-10 per-term budget of any consumer.
        let mu: f64 = 2.0;
        for m in [12u32, 16, 20, 24] {
            let s = -((m as f64 + 1.0) / 2.0);
            let weight = mu.powi(m as i32) / (1..=m).map(f64::from).product::<f64>();
            for &a in &[0.5, 1.0, 2.0] {
                let v1 = hurwitz_zeta(s, a, &em()).unwrap();
                let v2 = match hurwitz_zeta(s, a, &series()) {
                    Ok(v) => v,
                    Err(crate::Error::Numerical {
                        best_estimate,
                        error_bound,
                        ..
                    }) => {
                        assert!(
                            error_bound < 5e-3,
                            "m={m} s={s} a={a}: bound {error_bound:e} too loose"
                        );
                        best_estimate
                    }
                    Err(other) => panic!("m={m} s={s} a={a}: {other}"),
                };
                assert!(
                    (v1 - v2).abs() <= 5e-3 * v2.abs().max(1.0),
                    "m={m} s={s} a={a}: em {v1} vs series {v2}"
                );
                let weighted = (v1 - v2).abs() * weight;
                assert!(
                    weighted <= 1e-12 * (v2.abs() * weight).max(1.0),
                    "m={m} s={s} a={a}: weighted gap {weighted:e}"
                );
            }
        }
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn continuation_matches_independent_references() {
        // Frozen references from 40-digit multiprecision arithmetic, kept
        // beyond f64 precision on purpose. The base 0.4 is inexact in
        // binary, which exercises the exact-node construction of the series
        // oracle: f64-rounded nodes fail this battery by fifteen orders of
        // magnitude at s = -5.5.
        let cases = [
            (-5.5, 0.4, 6.0047321389785081e-4),
            (-5.5, 1.0, -2.6714580198992246e-3),
            (-5.5, 6.0, -9502.8582813800389),
            (-2.0, 0.4, -8.0e-3),
            (-0.5, 0.4, 8.4719544987461638e-2),
            (0.25, 0.4, 1.4419729791358868e-2),
            (3.7, 0.4, 30.021232324986807),
        ];
        for &(s, a, want) in &cases {
            let v_em = hurwitz_zeta(s, a, &em()).unwrap();
            assert!(
                (v_em - want).abs() <= 1e-9 * want.abs().max(1.0),
                "euler-maclaurin at (s={s}, a={a}): {v_em} vs {want}"
            );
            let v_series = hurwitz_zeta(s, a, &series()).unwrap();
            assert!(
                (v_series - want).abs() <= 1e-10 * want.abs().max(1.0),
                "series at (s={s}, a={a}): {v_series} vs {want}"
            );
        }
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn series_refuses_tolerances_below_its_roundoff_floor() {
        // At s = -12.5 the binomial roundoff floor allows only ~1e-4
        // absolute accuracy, far above the default certified tolerance; the
        // reference value is 40-digit multiprecision.
        let want = 0.0405679628828907756;
        match hurwitz_zeta(-12.5, 0.5, &series()) {
            Err(crate::Error::Numerical {
                best_estimate,
                error_bound,
                ..
            }) => {
                assert!(
                    (best_estimate - want).abs() <= error_bound,
                    "bound {error_bound:e} does not cover {best_estimate} vs {want}"
                );
                assert!(error_bound < 1e-2, "bound {error_bound:e} too loose");
            }
            other => panic!("expected a numerical failure, got {other:?}"),
        }
        let loose = ZetaMethod {
            tolerance: 3e-3,
            ..ZetaMethod::hasse_series()
        };
        let v = hurwitz_zeta(-12.5, 0.5, &loose).unwrap();
        assert!((v - want).abs() <= 1e-3, "loose-tolerance value {v} vs {want}");
    }

    // ==================== Pole diagnostics ====================

    #[test]
    fn residue_check_tends_to_one() {
        for &a in &[0.5, 1.0, 2.0, 10.0] {
            let r2 = zeta_residue_check(a, 1e-2).unwrap();
            let r4 = zeta_residue_check(a, 1e-4).unwrap();
            assert!((r4 - 1.0).abs() < (r2 - 1.0).abs());
            assert!((r4 - 1.0).abs() < 1e-3);
        }
    }

    #[test]
    fn residue_extrapolation_hits_one_to_1e6() {
        for &a in &[0.5, 1.0, 2.0, 10.0] {
            let r = zeta_residue_extrapolated(a).unwrap();
            assert!((r - 1.0).abs() < 1e-6, "a = {a}: {r}");
        }
    }

    #[test]
    fn residue_check_rejects_out_of_range_eps() {
        assert!(matches!(
            zeta_residue_check(1.0, 0.0),
            Err(crate::Error::Domain(_))
        ));
        assert!(matches!(
            zeta_residue_check(1.0, 0.5),
            Err(crate::Error::Domain(_))
        ));
        assert!(matches!(
            zeta_residue_check(1.0, -0.1),
            Err(crate::Error::Domain(_))
        ));
    }

    // ==================== Error paths ====================

    #[test]
    fn pole_at_s_one_is_reported() {
        assert!(matches!(
            hurwitz_zeta(1.0, 2.0, &em()),
            Err(crate::Error::Pole(_))
        ));
    }

    #[test]
    fn non_positive_a_is_rejected() {
        for &a in &[0.0, -1.0] {
            assert!(matches!(
                hurwitz_zeta(0.5, a, &em()),
                Err(crate::Error::Domain(_))
            ));
        }
    }

    #[test]
    fn invalid_method_config_is_rejected() {
        let bad_trunc = ZetaMethod {
            truncation: 0,
            ..ZetaMethod::euler_maclaurin()
        };
        assert!(matches!(
            hurwitz_zeta(0.5, 1.0, &bad_trunc),
            Err(crate::Error::Domain(_))
        ));
        let bad_tol = ZetaMethod {
            tolerance: 0.0,
            ..ZetaMethod::euler_maclaurin()
        };
        assert!(matches!(
            hurwitz_zeta(0.5, 1.0, &bad_tol),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn riemann_helper_matches_hurwitz_at_one() {
        let s = -2.5;
        assert_abs_diff_eq!(
            super::riemann_zeta(s).unwrap(),
            hurwitz_zeta(s, 1.0, &em()).unwrap(),
            epsilon = 1e-14
        );
    }
}
