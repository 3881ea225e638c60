//! Thermodynamics of the Landau spectrum in zeta-continued and direct form.
//!
//! All quantities are functions of the dimensionless pair μ = √(2e𝓑)/T and
//! κ = (m² + k_z²)/(2e𝓑), built from the Boltzmann moments
//!
//! * M_p(μ, κ) = Σ_{n≥0} (κ + n)^(p/2) exp(−μ √(κ + n)), p ∈ {0, 1, 2},
//!
//! with M₀ = Z the partition sum, U = M₁/M₀ the internal energy in units of
//! √(2e𝓑), and C = μ²(M₂/M₀ − U²) the specific heat. Two independent routes
//! evaluate the moments:
//!
//! * [`partition_moment_direct`]: adaptive direct summation, stopping when
//!   the integral tail bound ∫ 2T^(p+1) e^(−μT) dT falls below 1e-12 of the
//!   partial sum; the bound is returned with the value.
//! * [`partition_moment_zeta`]: the small-μ expansion
//!   Σ_m ζ_κ(−(m+p)/2) (−μ)^m / m! + 2(p+1)!/μ^(p+2), where
//!   ζ_κ(s) = Σ_{n≥0} (κ+n)^(−s) continues through the Hurwitz zeta
//!   function. The series is asymptotic in μ and is used inside μ ≤ 2;
//!   beyond the window the routine falls back to the direct sum and flags
//!   it.
//!
//! Entropy comes from the thermodynamic relation S = μ² dF/dμ with
//! F = −ln Z / μ, differentiated numerically ([`entropy_thermo`]); the
//! identity S = ln Z + μU ([`entropy_identity`]) is kept as a separate
//! route so the two can check each other.
//!
//! The information quantifiers of the thermal mixture (one spin-down
//! first-branch member per level, as in
//! [`crate::spinor_wigner::thermal_ensemble`]) reduce to weight arithmetic
//! over pₙ = e^(−μ√(κ+n)). [`thermal_purity`] covers every κ;
//! [`thermal_entropy_ps`], [`thermal_entropy_sp`] and
//! [`thermal_concurrence_sq`] are the gapless κ = 0 closed forms, where the
//! ground weight is p₀ = 1 and excited members carry Aₙ = 0, Bₙ = 1,
//! ηₙ = 1/2. All of them benchmark the Wigner-matrix pipeline.

use crate::specfun::zeta::riemann_zeta;
use crate::specfun::{hurwitz_zeta, ZetaMethod};
use crate::{Error, Result};

/// Upper edge of the μ window where the zeta series is trusted.
pub const ZETA_SERIES_MU_MAX: f64 = 2.0;
/// Default order of the zeta series.
pub const DEFAULT_SERIES_ORDER: usize = 40;
/// Relative tail target of the direct sums.
const DIRECT_TAIL_TOL: f64 = 1e-12;
/// Largest number of levels a direct sum may visit. The deepest supported
/// quasi-continuum point μ = 0.01 needs about 1.7e7 levels.
const DIRECT_MAX_TERMS: usize = 20_000_000;

fn check_inputs(mu: f64, kappa: f64) -> Result<()> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::Domain(format!(
            "inverse-temperature parameter must be positive and finite, got {mu}"
        )));
    }
    if !(kappa.is_finite() && kappa >= 0.0) {
        return Err(Error::Domain(format!(
            "gap parameter must be non-negative and finite, got {kappa}"
        )));
    }
    Ok(())
}

/// A directly summed Boltzmann moment with its certified truncation error.
#[derive(Clone, Copy, Debug)]
pub struct PartitionSum {
    /// Value of the truncated sum.
    pub value: f64,
    /// Upper bound on the omitted tail.
    pub tail_bound: f64,
    /// Number of levels summed.
    pub terms: usize,
}

/// Integral bound on Σ_{n≥first} (κ+n)^(p/2) e^(−μ√(κ+n)): the summand
/// decreases once μ√(κ+n) > p, so the sum is bounded by
/// ∫ 2T^(p+1) e^(−μT) dT from T = √(κ + first − 1).
fn moment_tail_bound(mu: f64, kappa: f64, power: u32, first: usize) -> f64 {
    let t = (kappa + first as f64 - 1.0).max(0.0).sqrt();
    let e = (-mu * t).exp();
    match power {
        0 => 2.0 / (mu * mu) * (1.0 + mu * t) * e,
        1 => 2.0 * e * (t * t / mu + 2.0 * t / (mu * mu) + 2.0 / (mu * mu * mu)),
        2 => {
            e * (2.0 * t * t * t / mu
                + 6.0 * t * t / (mu * mu)
                + 12.0 * t / (mu * mu * mu)
                + 12.0 / (mu * mu * mu * mu))
        }
        _ => unreachable!("moment power is validated before use"),
    }
}

fn moment_direct_with_tol(mu: f64, kappa: f64, power: u32, tol: f64) -> Result<PartitionSum> {
    check_inputs(mu, kappa)?;
    if power > 2 {
        return Err(Error::Domain(format!(
            "moment power must be 0, 1, or 2, got {power}"
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain(format!(
            "tail tolerance must be positive and finite, got {tol}"
        )));
    }
    let mut sum = 0.0;
    for n in 0..DIRECT_MAX_TERMS {
        let t = (kappa + n as f64).sqrt();
        sum += t.powi(power as i32) * (-mu * t).exp();
        // The integral bound needs the summand decreasing, true beyond
        // mu * t > power.
        if mu * t > power as f64 {
            let tail = moment_tail_bound(mu, kappa, power, n + 1);
            if tail <= tol * sum {
                return Ok(PartitionSum {
                    value: sum,
                    tail_bound: tail,
                    terms: n + 1,
                });
            }
        }
    }
    Err(Error::Numerical {
        context: format!(
            "direct moment p = {power} at mu = {mu}, kappa = {kappa} did not converge"
        ),
        best_estimate: sum,
        error_bound: moment_tail_bound(mu, kappa, power, DIRECT_MAX_TERMS),
    })
}

/// Direct adaptive sum of the Boltzmann moment M_p, p ∈ {0, 1, 2}.
///
/// Errors with [`Error::Domain`] on invalid inputs or p > 2, and with
/// [`Error::Numerical`] carrying the partial sum when 2e7 levels do not
/// reach the 1e-12 relative tail target.
pub fn partition_moment_direct(mu: f64, kappa: f64, power: u32) -> Result<PartitionSum> {
    moment_direct_with_tol(mu, kappa, power, DIRECT_TAIL_TOL)
}

/// The partition sum Z(μ, κ) = Σ_{n≥0} e^(−μ√(κ+n)) summed directly until
/// the integral tail bound drops below `tol` relative to the partial sum.
/// The achieved bound and term count come back with the value.
///
/// Errors as [`partition_moment_direct`] does, plus [`Error::Domain`] for a
/// non-positive tolerance.
pub fn partition_direct(mu: f64, kappa: f64, tol: f64) -> Result<PartitionSum> {
    moment_direct_with_tol(mu, kappa, 0, tol)
}

/// The partition sum through the zeta-continued series of order `order`,
/// with the default zeta configuration. Outside the μ ≤ 2 window the value
/// falls back to the direct sum and is flagged.
///
/// Errors as [`partition_moment_zeta`] does.
pub fn partition_zeta(mu: f64, kappa: f64, order: usize) -> Result<Evaluated> {
    partition_moment_zeta(mu, kappa, 0, order, &ZetaMethod::euler_maclaurin())
}

/// The spectral zeta function ζ_κ(s) = Σ_{n≥0} (κ + n)^(−s), continued in s.
///
/// For κ > 0 this is the Hurwitz zeta function at a = κ. At κ = 0 the n = 0
/// term degenerates: its continued contribution is κ^(−s) → 1 at s = 0 and 0
/// for s < 0, so ζ₀(s) = ζ(s) plus 1 exactly at s = 0.
///
/// Errors as [`hurwitz_zeta`] does.
pub fn zeta_kappa(s: f64, kappa: f64, method: &ZetaMethod) -> Result<f64> {
    if !(kappa.is_finite() && kappa >= 0.0) {
        return Err(Error::Domain(format!(
            "gap parameter must be non-negative and finite, got {kappa}"
        )));
    }
    if kappa == 0.0 {
        let base = riemann_zeta(s)?;
        Ok(if s == 0.0 { base + 1.0 } else { base })
    } else {
        hurwitz_zeta(s, kappa, method)
    }
}

/// A moment evaluated through the zeta series, with a flag recording whether
/// the μ window forced a fall back to the direct sum.
#[derive(Clone, Copy, Debug)]
pub struct Evaluated {
    /// The moment value.
    pub value: f64,
    /// True when μ lay outside the series window and the direct sum was
    /// used instead.
    pub used_direct_fallback: bool,
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Zeta-continued Boltzmann moment M_p:
/// Σ_{m=0..order} ζ_κ(−(m+p)/2) (−μ)^m / m! + 2(p+1)!/μ^(p+2).
///
/// Inside μ ≤ 2 the truncated series is returned; beyond the window it is
/// asymptotically useless, so the direct sum is substituted and flagged.
///
/// Errors as the underlying zeta evaluation and direct sum do.
pub fn partition_moment_zeta(
    mu: f64,
    kappa: f64,
    power: u32,
    order: usize,
    method: &ZetaMethod,
) -> Result<Evaluated> {
    check_inputs(mu, kappa)?;
    if power > 2 {
        return Err(Error::Domain(format!(
            "moment power must be 0, 1, or 2, got {power}"
        )));
    }
    if mu > ZETA_SERIES_MU_MAX {
        return Ok(Evaluated {
            value: partition_moment_direct(mu, kappa, power)?.value,
            used_direct_fallback: true,
        });
    }
    let mut acc = 2.0 * factorial(power + 1) / mu.powi(power as i32 + 2);
    let mut weight = 1.0;
    for m in 0..=order {
        let s = -((m + power as usize) as f64) / 2.0;
        acc += zeta_kappa(s, kappa, method)? * weight;
        weight *= -mu / (m as f64 + 1.0);
    }
    Ok(Evaluated {
        value: acc,
        used_direct_fallback: false,
    })
}

/// Internal energy U = M₁/M₀ in units of √(2e𝓑), from the direct sums.
pub fn internal_energy(mu: f64, kappa: f64) -> Result<f64> {
    Ok(partition_moment_direct(mu, kappa, 1)?.value / partition_moment_direct(mu, kappa, 0)?.value)
}

/// Specific heat C = μ² (M₂/M₀ − U²), from the direct sums. Approaches 2 in
/// the quasi-continuum μ → 0.
pub fn specific_heat(mu: f64, kappa: f64) -> Result<f64> {
    let z = partition_moment_direct(mu, kappa, 0)?.value;
    let u = partition_moment_direct(mu, kappa, 1)?.value / z;
    let m2 = partition_moment_direct(mu, kappa, 2)?.value;
    Ok(mu * mu * (m2 / z - u * u))
}

/// Free energy F = −ln Z / μ.
pub fn free_energy(mu: f64, kappa: f64) -> Result<f64> {
    Ok(-partition_moment_direct(mu, kappa, 0)?.value.ln() / mu)
}

/// Entropy S = μ² dF/dμ by three-level Richardson-extrapolated central
/// differences with base step h = 0.02 μ.
pub fn entropy_thermo(mu: f64, kappa: f64) -> Result<f64> {
    check_inputs(mu, kappa)?;
    let h = 0.02 * mu;
    let central = |step: f64| -> Result<f64> {
        Ok((free_energy(mu + step, kappa)? - free_energy(mu - step, kappa)?) / (2.0 * step))
    };
    let d1 = central(h)?;
    let d2 = central(0.5 * h)?;
    let d3 = central(0.25 * h)?;
    let r1 = (4.0 * d2 - d1) / 3.0;
    let r2 = (4.0 * d3 - d2) / 3.0;
    let derivative = (16.0 * r2 - r1) / 15.0;
    Ok(mu * mu * derivative)
}

/// Entropy through the closed relation S = ln Z + μ U, kept as an
/// independent route against [`entropy_thermo`].
pub fn entropy_identity(mu: f64, kappa: f64) -> Result<f64> {
    let z = partition_moment_direct(mu, kappa, 0)?.value;
    let u = partition_moment_direct(mu, kappa, 1)?.value / z;
    Ok(z.ln() + mu * u)
}

/// Level-occupation purity Σ (pₙ/Z)² = Z(2μ)/Z(μ)². Approaches μ²/8 in the
/// quasi-continuum at κ = 0.
pub fn thermal_purity(mu: f64, kappa: f64) -> Result<f64> {
    let z = partition_moment_direct(mu, kappa, 0)?.value;
    let z2 = partition_moment_direct(2.0 * mu, kappa, 0)?.value;
    Ok(z2 / (z * z))
}

/// The gapless Boltzmann weights pₙ = e^(−μ√n) up to the partition
/// truncation level, with their sum.
fn gapless_weight_table(mu: f64) -> Result<(Vec<f64>, f64)> {
    let z = partition_moment_direct(mu, 0.0, 0)?;
    let weights: Vec<f64> = (0..z.terms)
        .map(|n| (-mu * (n as f64).sqrt()).exp())
        .collect();
    Ok((weights, z.value))
}

/// Phase-space information deficit of the gapless (κ = 0) thermal mixture,
/// from weight arithmetic: the phase-space density expands over the radial
/// basis with coefficients c₀ = (p₀ + p₁/2)/Z and c_k = (p_k + p_{k+1})/(2Z)
/// for k ≥ 1, so I_ps = 1 − Σ c².
pub fn thermal_entropy_ps(mu: f64) -> Result<f64> {
    let (p, z) = gapless_weight_table(mu)?;
    let mut sum_sq = (p[0] + 0.5 * p.get(1).copied().unwrap_or(0.0)).powi(2);
    for k in 1..p.len() {
        let c = 0.5 * (p[k] + p.get(k + 1).copied().unwrap_or(0.0));
        sum_sq += c * c;
    }
    Ok(1.0 - sum_sq / (z * z))
}

/// Spin-parity information deficit of the gapless (κ = 0) thermal mixture.
///
/// The ground member occupies one spinor slot alone while every excited
/// member splits evenly between two, so the reduced matrix is
/// diag(0, Z+p₀, Z−p₀, 0)/(2Z) and I_sp = (1 − p₀²/Z²)/2 with p₀ = 1.
pub fn thermal_entropy_sp(mu: f64) -> Result<f64> {
    let z = partition_moment_direct(mu, 0.0, 0)?.value;
    Ok(0.5 * (1.0 - 1.0 / (z * z)))
}

/// Ensemble squared concurrence of the gapless (κ = 0) thermal mixture:
/// every excited member carries 2(ηB)² = 1/2 and the ground member none,
/// so C² = (Z − p₀)/(2Z) with p₀ = 1.
pub fn thermal_concurrence_sq(mu: f64) -> Result<f64> {
    let z = partition_moment_direct(mu, 0.0, 0)?.value;
    Ok((z - 1.0) / (2.0 * z))
}

/// One thermodynamic evaluation request.
#[derive(Clone, Copy, Debug)]
pub struct ThermalSpec {
    /// Inverse-temperature parameter μ = √(2e𝓑)/T.
    pub mu: f64,
    /// Gap parameter κ = (m² + k_z²)/(2e𝓑).
    pub kappa: f64,
    /// Zeta series order.
    pub order: usize,
    /// Zeta evaluation method.
    pub method: ZetaMethod,
}

impl ThermalSpec {
    /// Request with the default series order and method.
    pub fn new(mu: f64, kappa: f64) -> ThermalSpec {
        ThermalSpec {
            mu,
            kappa,
            order: DEFAULT_SERIES_ORDER,
            method: ZetaMethod::euler_maclaurin(),
        }
    }

    /// Evaluate every quantity of the row.
    ///
    /// Errors as the underlying routines do.
    pub fn evaluate(&self) -> Result<ThermalReport> {
        let z_direct = partition_moment_direct(self.mu, self.kappa, 0)?;
        let z_zeta = partition_moment_zeta(self.mu, self.kappa, 0, self.order, &self.method)?;
        // The information closed forms exist only for the gapless spectrum.
        let gapless = self.kappa == 0.0;
        Ok(ThermalReport {
            mu: self.mu,
            kappa: self.kappa,
            z_direct: z_direct.value,
            z_zeta: z_zeta.value,
            zeta_fallback: z_zeta.used_direct_fallback,
            internal_energy: internal_energy(self.mu, self.kappa)?,
            specific_heat: specific_heat(self.mu, self.kappa)?,
            free_energy: free_energy(self.mu, self.kappa)?,
            entropy: entropy_thermo(self.mu, self.kappa)?,
            purity: thermal_purity(self.mu, self.kappa)?,
            info_ps: gapless.then(|| thermal_entropy_ps(self.mu)).transpose()?,
            info_sp: gapless.then(|| thermal_entropy_sp(self.mu)).transpose()?,
            concurrence_sq: gapless.then(|| thermal_concurrence_sq(self.mu)).transpose()?,
        })
    }
}

/// Every thermodynamic quantity at one (μ, κ) point.
#[derive(Clone, Copy, Debug)]
pub struct ThermalReport {
    /// Inverse-temperature parameter.
    pub mu: f64,
    /// Gap parameter.
    pub kappa: f64,
    /// Partition sum from the direct route.
    pub z_direct: f64,
    /// Partition sum from the zeta series (or the flagged fallback).
    pub z_zeta: f64,
    /// True when the zeta series window forced the direct fallback.
    pub zeta_fallback: bool,
    /// Internal energy U.
    pub internal_energy: f64,
    /// Specific heat C.
    pub specific_heat: f64,
    /// Free energy F.
    pub free_energy: f64,
    /// Entropy S from the differentiated free energy.
    pub entropy: f64,
    /// Level-occupation purity Z(2μ)/Z².
    pub purity: f64,
    /// Phase-space information deficit; only the gapless κ = 0 spectrum has
    /// a closed form.
    pub info_ps: Option<f64>,
    /// Spin-parity information deficit (gapless only).
    pub info_sp: Option<f64>,
    /// Ensemble squared concurrence (gapless only).
    pub concurrence_sq: Option<f64>,
}
