//! Thermal level mixtures at inverse-temperature parameter μ.
//!
//! At temperature T the level occupations are Boltzmann factors of the
//! spectrum Eₙ = √(2e𝓑) √(κ + n), which in the dimensionless variables
//! μ = √(2e𝓑)/T and κ = (m² + k_z²)/(2e𝓑) read pₙ = exp(−μ √(κ + n)).
//! Because the ground level carries no spin degeneracy, the mixture drafts
//! a single member per level: the spin-down state of the first branch.
//! Every component is pure and components of different levels are
//! orthogonal, so the matrix purity is exactly Σ (pₙ/Z)².
//!
//! The mixture normalizes over the included levels, so the matrix is
//! exactly normalized at every truncation. Level parameters are produced
//! in the dimensionless units 2e𝓑 = 1 with k_z = 0 and m = √(2κ); the
//! ground state then has A₀ = 0 and η₀ = 1 for every κ, and excited
//! levels at κ = 0 have Aₙ = 0, Bₙ = 1, ηₙ = 1/2.
//!
//! The truncation level is chosen from the integral tail bound
//! Σ_{n>N} pₙ ≤ (2/μ²)(1 + μ√(κ+N)) exp(−μ√(κ+N)), keeping the omitted
//! weight below 1e-12 of the partition sum.

use super::{
    add_scaled_entries, exact_wigner, spinor_state, zero_entries, DecompositionTerm,
    OneParticleParams, Parity, PureComponent, Spin, StateMeta, WignerMatrix,
};
use crate::{Error, Result};

/// Relative tail weight left out by the automatic truncation.
const THERMAL_TAIL_TOL: f64 = 1e-12;
/// Largest level count the automatic truncation accepts.
const THERMAL_MAX_LEVELS: usize = 100_000;

fn check_thermal_inputs(mu: f64, kappa: f64) -> Result<()> {
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

/// Boltzmann weight exp(−μ √(κ + n)) of level n.
pub(crate) fn level_weight(mu: f64, kappa: f64, n: usize) -> f64 {
    (-mu * (kappa + n as f64).sqrt()).exp()
}

/// Upper bound on the total weight of levels n ≥ `first`: the summand
/// decreases, so the sum is bounded by the integral from `first` − 1.
pub(crate) fn tail_weight_bound(mu: f64, kappa: f64, first: usize) -> f64 {
    let t = (kappa + first as f64 - 1.0).max(0.0).sqrt();
    2.0 / (mu * mu) * (1.0 + mu * t) * (-mu * t).exp()
}

/// Smallest inclusive truncation level N such that the weight omitted above
/// N stays below 1e-12 of the partition sum.
///
/// Errors with [`Error::Domain`] for invalid inputs or when more than 100000
/// levels would be needed (deep in that regime the scalar thermodynamic
/// routines in [`crate::thermo`] remain available).
pub fn thermal_level_count(mu: f64, kappa: f64) -> Result<usize> {
    check_thermal_inputs(mu, kappa)?;
    let mut partial = 0.0;
    for n in 0..=THERMAL_MAX_LEVELS {
        partial += level_weight(mu, kappa, n);
        if tail_weight_bound(mu, kappa, n + 1) <= THERMAL_TAIL_TOL * partial {
            return Ok(n);
        }
    }
    Err(Error::Domain(format!(
        "mu = {mu} needs more than {THERMAL_MAX_LEVELS} levels for tail {THERMAL_TAIL_TOL:e}; \
         the matrix construction is not practical this deep"
    )))
}

/// Thermal Wigner matrix truncated at level `n_max` inclusive and normalized
/// over the included levels.
///
/// Each level contributes its spin-down first-branch member, so the
/// recorded decomposition is a list of orthogonal pure basis states and
/// the concurrence of the mixture stays available through it.
///
/// Errors with [`Error::Domain`] for non-positive or non-finite μ, negative
/// or non-finite κ.
pub fn thermal_ensemble(mu: f64, kappa: f64, n_max: usize) -> Result<WignerMatrix> {
    check_thermal_inputs(mu, kappa)?;
    let weights: Vec<f64> = (0..=n_max).map(|n| level_weight(mu, kappa, n)).collect();
    let z: f64 = weights.iter().sum();
    if z.is_nan() || z <= 0.0 {
        return Err(Error::Domain(format!(
            "all level weights underflow at mu = {mu}, kappa = {kappa}"
        )));
    }
    let mass = (2.0 * kappa).sqrt();
    let mut entries = zero_entries();
    let mut terms = Vec::with_capacity(weights.len());
    for (n, w) in weights.iter().enumerate() {
        let params = OneParticleParams::new(n as u32, mass, 0.0, 1.0)?;
        let member = spinor_state(&params, Parity::One, Spin::Minus)?;
        let member_entries = exact_wigner(&member, &member)?;
        add_scaled_entries(&mut entries, &member_entries, w / z);
        terms.push(DecompositionTerm {
            weight: w / z,
            component: PureComponent::Basis {
                params,
                r: Parity::One,
                spin: Spin::Minus,
            },
        });
    }
    let meta = StateMeta {
        descriptor: format!("mu={mu},kappa={kappa}"),
        decomposition: Some(terms),
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

/// Thermal Wigner matrix with the truncation level chosen automatically from
/// the tail bound.
///
/// Errors as [`thermal_level_count`] and [`thermal_ensemble`] do.
pub fn thermal_ensemble_auto(mu: f64, kappa: f64) -> Result<WignerMatrix> {
    let n_max = thermal_level_count(mu, kappa)?;
    thermal_ensemble(mu, kappa, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infometrics::{concurrence_sq_recorded, purity, reduced_spin_parity};
    use approx::assert_abs_diff_eq;

    #[test]
    fn ensemble_is_exactly_normalized() {
        for &(mu, kappa) in &[(0.5, 0.0), (1.0, 1.0), (3.0, 10.0)] {
            let w = thermal_ensemble_auto(mu, kappa).unwrap();
            assert_abs_diff_eq!(w.normalization(), 1.0, epsilon = 1e-13);
            w.check_pseudo_hermitian().unwrap();
        }
    }

    #[test]
    fn massless_reduced_matrix_matches_weight_arithmetic() {
        let mu = 1.2;
        let n_max = thermal_level_count(mu, 0.0).unwrap();
        let w = thermal_ensemble(mu, 0.0, n_max).unwrap();
        let weights: Vec<f64> = (0..=n_max).map(|n| level_weight(mu, 0.0, n)).collect();
        let z: f64 = weights.iter().sum();
        let p0 = weights[0];
        // The ground member occupies the second slot alone; every excited
        // member splits evenly between the second and third slots.
        let rho = reduced_spin_parity(&w).unwrap();
        assert_abs_diff_eq!(rho[(0, 0)], 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(1, 1)], (z + p0) / (2.0 * z), epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(2, 2)], (z - p0) / (2.0 * z), epsilon = 1e-13);
        assert_abs_diff_eq!(rho[(3, 3)], 0.0, epsilon = 1e-13);
        // First and last rows of the matrix itself are empty as well.
        for j in 0..4 {
            assert!(w.entry(0, j).is_empty());
            assert!(w.entry(3, j).is_empty());
        }
    }

    #[test]
    fn purity_is_the_two_temperature_weight_ratio() {
        for &(mu, kappa) in &[(1.0, 0.0), (0.8, 1.3)] {
            let n_max = thermal_level_count(mu, kappa).unwrap();
            let w = thermal_ensemble(mu, kappa, n_max).unwrap();
            let weights: Vec<f64> = (0..=n_max).map(|n| level_weight(mu, kappa, n)).collect();
            let z: f64 = weights.iter().sum();
            let z2: f64 = weights.iter().map(|p| p * p).sum();
            // Orthogonal pure components make the mixture purity the sum of
            // squared weights, which is the partition sum at twice mu.
            assert_abs_diff_eq!(purity(&w), z2 / (z * z), epsilon = 1e-10);
        }
    }

    #[test]
    fn recorded_concurrence_averages_the_member_values() {
        let (mu, kappa) = (1.5, 0.4);
        let n_max = thermal_level_count(mu, kappa).unwrap();
        let w = thermal_ensemble(mu, kappa, n_max).unwrap();
        let weights: Vec<f64> = (0..=n_max).map(|n| level_weight(mu, kappa, n)).collect();
        let z: f64 = weights.iter().sum();
        // Member n has squared concurrence 2(ηB)² = n/(2(κ+n)); the ground
        // member contributes zero.
        let expected: f64 = weights
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, p)| p / z * n as f64 / (2.0 * (kappa + n as f64)))
            .sum();
        assert_abs_diff_eq!(concurrence_sq_recorded(&w).unwrap(), expected, epsilon = 1e-13);
    }

    #[test]
    fn cold_ensemble_approaches_the_pure_ground_state() {
        let w = thermal_ensemble_auto(50.0, 0.0).unwrap();
        assert!((purity(&w) - 1.0).abs() < 1e-10);
        // The surviving weight sits in the ground slot of the reduced matrix.
        let rho = reduced_spin_parity(&w).unwrap();
        assert!((rho[(1, 1)] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn level_count_shrinks_with_colder_ensembles() {
        let hot = thermal_level_count(0.5, 0.0).unwrap();
        let cold = thermal_level_count(4.0, 0.0).unwrap();
        assert!(cold < hot);
        // The tail bound must actually hold against a much longer sum.
        let n = thermal_level_count(1.0, 0.0).unwrap();
        let z: f64 = (0..=n).map(|k| level_weight(1.0, 0.0, k)).sum();
        let omitted: f64 = (n + 1..=n + 4000).map(|k| level_weight(1.0, 0.0, k)).sum();
        assert!(omitted <= tail_weight_bound(1.0, 0.0, n + 1));
        assert!(omitted <= 1e-12 * z);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(thermal_ensemble(0.0, 0.0, 10).is_err());
        assert!(thermal_ensemble(-1.0, 0.0, 10).is_err());
        assert!(thermal_ensemble(1.0, -0.5, 10).is_err());
        assert!(thermal_ensemble(f64::NAN, 0.0, 10).is_err());
        // Deep quasi-continuum request overruns the level cap.
        assert!(matches!(
            thermal_level_count(0.004, 0.0),
            Err(crate::Error::Domain(_))
        ));
    }
}
