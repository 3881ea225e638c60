//! Graphene-analog map for massless levels at rest.
//!
//! At m = 0 and k_z = 0 the level constants collapse to η = 1/2, A = 0,
//! B = 1, and the spectrum ±√(2n·e𝓑) matches the Landau ladder of a
//! two-dimensional Dirac material. Each graphene band eigenstate maps onto an
//! equal-weight superposition of two degenerate members from opposite parity
//! branches:
//!
//! * conduction, eigenvalue +√(2n·e𝓑): (|n, 1, +⟩ + |n, 2, −⟩)/√2,
//! * valence, eigenvalue −√(2n·e𝓑): (−|n, 1, −⟩ + |n, 2, +⟩)/√2.
//!
//! The map records the pairing as data ([`GrapheneMap`]) rather than only
//! producing the Wigner matrix, because the spin-parity concurrence of the
//! analog state follows from the superposition formula at the massless
//! constants, C² = (1/2) cos² 2θ with θ = π/4, and not from the flip
//! functional of the realified cross-branch matrix. The latter picks up the
//! inter-branch mode correlations of the equal-weight combination and equals
//! 1/2 for every level; the reduced spin-parity density of the same matrix is
//! a two-term mixture of product states with zero two-qubit concurrence. Both
//! statements are pinned by tests.

use super::{
    exact_wigner, spinor_state, zero_entries, OneParticleParams, Parity, Spin, StateMeta,
    WignerMatrix,
};
use crate::{Error, Result};

/// Graphene band label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Band {
    /// Positive branch of the analog spectrum.
    Conduction,
    /// Negative branch of the analog spectrum.
    Valence,
}

impl std::fmt::Display for Band {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Band::Conduction => write!(f, "conduction"),
            Band::Valence => write!(f, "valence"),
        }
    }
}

/// The analog pairing of one graphene Landau level: which two degenerate
/// members combine, with what relative sign, and what the analog spectrum
/// and concurrence are.
#[derive(Clone, Debug)]
pub struct GrapheneMap {
    params: OneParticleParams,
    band: Band,
    labels: [(Parity, Spin); 2],
    relative_phase: f64,
    eigenvalue: f64,
}

impl GrapheneMap {
    /// Massless rest-frame constants of the level.
    pub fn params(&self) -> &OneParticleParams {
        &self.params
    }

    /// Band this map describes.
    pub fn band(&self) -> Band {
        self.band
    }

    /// The two combined members, in the order the phase applies to.
    pub fn labels(&self) -> [(Parity, Spin); 2] {
        self.labels
    }

    /// Equal weights of the two members.
    pub fn weights(&self) -> [f64; 2] {
        [0.5, 0.5]
    }

    /// Relative sign on the first member.
    pub fn relative_phase(&self) -> f64 {
        self.relative_phase
    }

    /// Analog band energy ±√(2n·e𝓑).
    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    /// Mixing angle of the equal-weight combination.
    pub fn analog_theta(&self) -> f64 {
        std::f64::consts::FRAC_PI_4
    }

    /// Spin-parity concurrence of the analog state from the superposition
    /// formula at the massless constants: (1/2) cos² 2θ, which vanishes at
    /// the equal-weight angle.
    pub fn concurrence_sq(&self) -> f64 {
        let c = (2.0 * self.analog_theta()).cos();
        0.5 * c * c
    }

    /// Realified Wigner matrix of the combination
    /// (phase·|first⟩ + |second⟩)/√2.
    pub fn wigner(&self) -> Result<WignerMatrix> {
        let [(r1, s1), (r2, s2)] = self.labels;
        let a = spinor_state(&self.params, r1, s1)?;
        let b = spinor_state(&self.params, r2, s2)?;
        let waa = exact_wigner(&a, &a)?;
        let wbb = exact_wigner(&b, &b)?;
        let wab = exact_wigner(&a, &b)?;
        let wba = exact_wigner(&b, &a)?;
        let mut entries = zero_entries();
        super::add_scaled_entries(&mut entries, &waa, 0.5);
        super::add_scaled_entries(&mut entries, &wbb, 0.5);
        super::add_scaled_entries(&mut entries, &wab, 0.5 * self.relative_phase);
        super::add_scaled_entries(&mut entries, &wba, 0.5 * self.relative_phase);
        let meta = StateMeta {
            descriptor: format!("graphene;n={};band={}", self.params.n(), self.band),
            decomposition: None,
        };
        Ok(WignerMatrix::from_entries(entries, meta))
    }
}

/// Build the analog pairing for graphene Landau level n ≥ 1 in field `eb`.
///
/// Errors with [`Error::Construction`] for n = 0: the zero mode is a single
/// member per branch and does not split into bands.
pub fn graphene_map(n: u32, band: Band, eb: f64) -> Result<GrapheneMap> {
    if n == 0 {
        return Err(Error::Construction(
            "the graphene zero mode does not split into bands; pick n >= 1".into(),
        ));
    }
    let params = OneParticleParams::new(n, 0.0, 0.0, eb)?;
    let magnitude = (2.0 * n as f64 * eb).sqrt();
    let (labels, relative_phase, eigenvalue) = match band {
        Band::Conduction => (
            [(Parity::One, Spin::Plus), (Parity::Two, Spin::Minus)],
            1.0,
            magnitude,
        ),
        Band::Valence => (
            [(Parity::One, Spin::Minus), (Parity::Two, Spin::Plus)],
            -1.0,
            -magnitude,
        ),
    };
    Ok(GrapheneMap {
        params,
        band,
        labels,
        relative_phase,
        eigenvalue,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn map_records_the_expected_pairings() {
        let c = graphene_map(2, Band::Conduction, 1.0).unwrap();
        assert_eq!(c.labels(), [(Parity::One, Spin::Plus), (Parity::Two, Spin::Minus)]);
        assert_eq!(c.relative_phase(), 1.0);
        assert_abs_diff_eq!(c.eigenvalue(), 2.0, epsilon = 1e-15);

        let v = graphene_map(2, Band::Valence, 1.0).unwrap();
        assert_eq!(v.labels(), [(Parity::One, Spin::Minus), (Parity::Two, Spin::Plus)]);
        assert_eq!(v.relative_phase(), -1.0);
        assert_abs_diff_eq!(v.eigenvalue(), -2.0, epsilon = 1e-15);

        assert_abs_diff_eq!(c.params().b_n(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.params().eta_n(), 0.5, epsilon = 1e-15);
        assert_eq!(c.params().a_n(), 0.0);
    }

    #[test]
    fn analog_concurrence_vanishes_at_equal_weight() {
        let map = graphene_map(3, Band::Valence, 1.0).unwrap();
        assert_abs_diff_eq!(map.concurrence_sq(), 0.0, epsilon = 1e-30);
    }

    #[test]
    fn band_states_are_normalized_and_pseudo_hermitian() {
        for band in [Band::Conduction, Band::Valence] {
            for n in 1..=3 {
                let w = graphene_map(n, band, 1.0).unwrap().wigner().unwrap();
                assert_abs_diff_eq!(w.normalization(), 1.0, epsilon = 1e-13);
                w.check_pseudo_hermitian().unwrap();
            }
        }
    }

    #[test]
    fn zero_mode_does_not_split() {
        assert!(matches!(
            graphene_map(0, Band::Conduction, 1.0),
            Err(crate::Error::Construction(_))
        ));
    }
}
