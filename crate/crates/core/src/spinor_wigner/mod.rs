//! Construction of equal-time Wigner matrices for relativistic Landau levels.
//!
//! A Dirac particle in a uniform magnetic field has discrete transverse
//! spectrum Eₙ = √(m² + k_z² + 2n·e𝓑). Each level n ≥ 1 is four-fold
//! degenerate at fixed k_z, labelled by an intrinsic-parity branch r ∈ {1, 2}
//! and a spin sign ± ([`Parity`], [`Spin`]); the lowest level keeps a single
//! member per parity branch. The positive-energy eigenspinors reduce, in the
//! oscillator gauge, to four-component combinations of the eigenfunctions
//! Fₙ(s) with coefficients built from the three spectrum constants
//!
//! * Aₙ = k_z / (Eₙ + m) (longitudinal-motion mixing),
//! * Bₙ = √(2n·e𝓑) / (Eₙ + m) (magnetic mixing),
//! * ηₙ = (Eₙ + m) / (2Eₙ) (normalization), with ηₙ(1 + Aₙ² + Bₙ²) = 1.
//!
//! The equal-time Wigner matrix of a configuration then collapses to exact
//! coefficient arithmetic on the phase-space basis: products Fₐ F_b map to
//! 𝓛-functions on equal indices and to 𝓜-functions on adjacent ones, which
//! is what [`WignerMatrix`] stores entry by entry as [`BasisExpansion`]
//! values. A direct numerical route through the Fourier kernel
//! ([`wigner_from_spinors`]) validates that algebra pointwise.
//!
//! Constructors: [`pure_state`], [`superposition`] (spin superposition inside
//! a degenerate level), [`spin_interference`] (its cross term),
//! [`spin_mixture`] and the general [`mixture`], [`maximally_mixed`], the
//! geometric family in [`gaussian`], thermal ensembles in [`thermal`], and
//! the graphene-analog map in [`graphene`].
//!
//! # Example
//!
//! ```
//! use landau_wigner::spinor_wigner::{OneParticleParams, Parity, Spin, pure_state};
//!
//! let params = OneParticleParams::new(2, 1.0, 0.3, 1.0).unwrap();
//! let w = pure_state(&params, Parity::Two, Spin::Plus).unwrap();
//! assert!((w.normalization() - 1.0).abs() < 1e-12);
//! w.check_pseudo_hermitian().unwrap();
//! ```

pub mod gaussian;
pub mod graphene;
pub mod thermal;

pub use gaussian::{gaussian_family, gaussian_family_with, GaussianClosedForm};
pub use graphene::{graphene_map, Band, GrapheneMap};
pub use thermal::{thermal_ensemble, thermal_ensemble_auto, thermal_level_count};

use std::fmt;

use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::phase_space::{kernel::kernel_integral, BasisExpansion, BasisLabel};
use crate::{Error, Result};

/// Diagonal of γ⁰ in the Dirac representation.
pub(crate) const GAMMA0: [f64; 4] = [1.0, 1.0, -1.0, -1.0];

/// Spin sign inside a degenerate level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Spin {
    /// The ω⁺ member.
    Plus,
    /// The ω⁻ member.
    Minus,
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spin::Plus => write!(f, "+"),
            Spin::Minus => write!(f, "-"),
        }
    }
}

/// Intrinsic-parity branch of a degenerate level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Branch r = 1.
    One,
    /// Branch r = 2.
    Two,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::One => write!(f, "1"),
            Parity::Two => write!(f, "2"),
        }
    }
}

/// Spectrum constants of one Landau level at fixed longitudinal momentum.
///
/// Invariants maintained by the constructors: Eₙ = √(m² + k_z² + 2n·e𝓑),
/// 0 ≤ Aₙ ≤ 1, 0 ≤ Bₙ ≤ 1 (the massless level attains B = 1), and
/// ηₙ(1 + Aₙ² + Bₙ²) = 1. The massless lowest level at k_z = 0 has E = 0 and
/// takes the limiting values η = 1, A = B = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OneParticleParams {
    n: u32,
    mass: f64,
    kz: f64,
    eb: f64,
    energy: f64,
    a: f64,
    b: f64,
    eta: f64,
}

impl OneParticleParams {
    /// Build the constants for level `n` with mass `m ≥ 0`, longitudinal
    /// momentum `kz ≥ 0`, and field strength `eb > 0`.
    ///
    /// Errors with [`Error::Domain`] for a negative mass or momentum, a
    /// non-positive field, or non-finite inputs.
    pub fn new(n: u32, mass: f64, kz: f64, eb: f64) -> Result<OneParticleParams> {
        if !(mass.is_finite() && kz.is_finite() && eb.is_finite()) {
            return Err(Error::Domain(format!(
                "spectrum constants require finite inputs, got m={mass}, kz={kz}, eb={eb}"
            )));
        }
        if mass < 0.0 {
            return Err(Error::Domain(format!("mass must be >= 0, got {mass}")));
        }
        if kz < 0.0 {
            return Err(Error::Domain(format!(
                "longitudinal momentum must be >= 0 in this convention, got {kz}"
            )));
        }
        if eb <= 0.0 {
            return Err(Error::Domain(format!(
                "field strength must be positive, got {eb}"
            )));
        }
        let energy = (mass * mass + kz * kz + 2.0 * n as f64 * eb).sqrt();
        let (a, b, eta) = if energy == 0.0 {
            // Massless lowest level at rest: the limiting member with full
            // weight on the single surviving component.
            (0.0, 0.0, 1.0)
        } else {
            (
                kz / (energy + mass),
                (2.0 * n as f64 * eb).sqrt() / (energy + mass),
                (energy + mass) / (2.0 * energy),
            )
        };
        let params = OneParticleParams {
            n,
            mass,
            kz,
            eb,
            energy,
            a,
            b,
            eta,
        };
        params.check_invariants()?;
        Ok(params)
    }

    /// Massless level n ≥ 1 parameterized by its magnetic mixing B ∈ [0, 1]:
    /// k_z = √(2n·e𝓑) √(1 − B²) / B and E = √(2n·e𝓑) / B. The endpoint
    /// B = 0 is the infinite-momentum limit, stored with E = k_z = ∞ and the
    /// limiting constants (A, B, η) = (1, 0, 1/2).
    ///
    /// Errors with [`Error::Domain`] for n = 0 (its B vanishes identically)
    /// or B outside [0, 1].
    pub fn massless_from_b(n: u32, b: f64, eb: f64) -> Result<OneParticleParams> {
        if n == 0 {
            return Err(Error::Domain(
                "the massless lowest level has B = 0 identically; pick n >= 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&b) {
            return Err(Error::Domain(format!(
                "magnetic mixing must lie in [0, 1], got {b}"
            )));
        }
        if !(eb.is_finite() && eb > 0.0) {
            return Err(Error::Domain(format!(
                "field strength must be positive, got {eb}"
            )));
        }
        if b == 0.0 {
            return Ok(OneParticleParams {
                n,
                mass: 0.0,
                kz: f64::INFINITY,
                eb,
                energy: f64::INFINITY,
                a: 1.0,
                b: 0.0,
                eta: 0.5,
            });
        }
        let root = (2.0 * n as f64 * eb).sqrt();
        let kz = root * (1.0 - b * b).max(0.0).sqrt() / b;
        OneParticleParams::new(n, 0.0, kz, eb)
    }

    fn check_invariants(&self) -> Result<()> {
        let closure = self.eta * (1.0 + self.a * self.a + self.b * self.b);
        if (closure - 1.0).abs() > 1e-12 {
            return Err(Error::Inconsistent(format!(
                "normalization closure eta(1 + A^2 + B^2) = {closure} deviates from 1"
            )));
        }
        if !(0.0..=1.0 + 1e-12).contains(&self.a) || !(0.0..=1.0 + 1e-12).contains(&self.b) {
            return Err(Error::Inconsistent(format!(
                "mixing constants out of range: A = {}, B = {}",
                self.a, self.b
            )));
        }
        Ok(())
    }

    /// Level index n.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Mass m.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Longitudinal momentum k_z.
    pub fn kz(&self) -> f64 {
        self.kz
    }

    /// Field strength e𝓑.
    pub fn eb(&self) -> f64 {
        self.eb
    }

    /// Level energy Eₙ.
    pub fn e_n(&self) -> f64 {
        self.energy
    }

    /// Longitudinal mixing Aₙ = k_z/(Eₙ + m).
    pub fn a_n(&self) -> f64 {
        self.a
    }

    /// Magnetic mixing Bₙ = √(2n·e𝓑)/(Eₙ + m).
    pub fn b_n(&self) -> f64 {
        self.b
    }

    /// Normalization ηₙ = (Eₙ + m)/(2Eₙ).
    pub fn eta_n(&self) -> f64 {
        self.eta
    }

    /// Dimensionless gap parameter κ = (m² + k_z²)/(2e𝓑).
    pub fn kappa(&self) -> f64 {
        (self.mass * self.mass + self.kz * self.kz) / (2.0 * self.eb)
    }
}

/// One spinor component: `coef · F_index(s)`. Slots with `coef == 0` or a
/// negative index are identically zero.
#[derive(Clone, Copy, Debug)]
pub(crate) struct SpinorComponent {
    pub index: i32,
    pub coef: f64,
}

impl SpinorComponent {
    fn live(&self) -> bool {
        self.coef != 0.0 && self.index >= 0
    }
}

/// A positive-energy eigenspinor configuration of one degenerate-level
/// member, reduced to its four `coef · Fₙ(s)` components.
#[derive(Clone, Debug)]
pub struct SpinorState {
    params: OneParticleParams,
    r: Parity,
    spin: Spin,
    comps: [SpinorComponent; 4],
}

impl SpinorState {
    /// Spectrum constants this spinor was built from.
    pub fn params(&self) -> &OneParticleParams {
        &self.params
    }

    /// Parity branch label.
    pub fn parity(&self) -> Parity {
        self.r
    }

    /// Spin label.
    pub fn spin(&self) -> Spin {
        self.spin
    }

    /// Level energy.
    pub fn energy(&self) -> f64 {
        self.params.e_n()
    }

    pub(crate) fn components(&self) -> impl Iterator<Item = (usize, SpinorComponent)> + '_ {
        self.comps
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.live())
    }

    /// Evaluate the four components at configuration-space point `s`.
    pub fn eval(&self, s: f64) -> [Complex64; 4] {
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for (slot, c) in self.components() {
            out[slot] = Complex64::new(c.coef * crate::specfun::hermite_gaussian(c.index, s), 0.0);
        }
        out
    }
}

/// Build the eigenspinor for level member (n, r, ±).
///
/// Errors with [`Error::Construction`] when the requested member does not
/// exist: the lowest level keeps only (r = 1, −) and (r = 2, +).
pub fn spinor_state(params: &OneParticleParams, r: Parity, spin: Spin) -> Result<SpinorState> {
    let n = params.n() as i32;
    let a = params.a_n();
    let b = params.b_n();
    let root_eta = params.eta_n().sqrt();
    let c = |index: i32, coef: f64| SpinorComponent {
        index,
        coef: coef * root_eta,
    };
    let dead = SpinorComponent {
        index: -1,
        coef: 0.0,
    };
    let comps = match (r, spin) {
        (Parity::One, Spin::Plus) => [c(n - 1, 1.0), dead, c(n - 1, a), c(n, -b)],
        (Parity::One, Spin::Minus) => [dead, c(n, 1.0), c(n - 1, -b), c(n, -a)],
        (Parity::Two, Spin::Plus) => [c(n - 1, b), c(n, a), dead, c(n, 1.0)],
        (Parity::Two, Spin::Minus) => [c(n - 1, -a), c(n, b), c(n - 1, 1.0), dead],
    };
    if !comps.iter().any(SpinorComponent::live) {
        return Err(Error::Construction(format!(
            "level n = {n} has no ({r}, {spin}) member: the lowest level keeps only (1, -) and (2, +)"
        )));
    }
    Ok(SpinorState {
        params: *params,
        r,
        spin,
        comps,
    })
}

/// Evaluate the configuration spinor of member (n, r, ±) at point `s`,
/// returning the four complex components.
pub fn config_spinor(
    params: &OneParticleParams,
    r: Parity,
    spin: Spin,
    s: f64,
) -> Result<[Complex64; 4]> {
    Ok(spinor_state(params, r, spin)?.eval(s))
}

/// Provenance metadata carried by every [`WignerMatrix`].
#[derive(Clone, Debug)]
pub struct StateMeta {
    /// Compact text form of the state (also the CLI serialization).
    pub descriptor: String,
    /// Orthogonal pure-state decomposition with weights, when one is known.
    pub decomposition: Option<Vec<DecompositionTerm>>,
}

/// One weighted component of an orthogonal pure-state decomposition.
#[derive(Clone, Debug)]
pub struct DecompositionTerm {
    /// Statistical weight in [0, 1].
    pub weight: f64,
    /// The pure component.
    pub component: PureComponent,
}

/// A pure state that can appear in a recorded decomposition.
#[derive(Clone, Debug)]
pub enum PureComponent {
    /// A degenerate-level basis member (n, r, ±).
    Basis {
        /// Spectrum constants of the member.
        params: OneParticleParams,
        /// Parity branch.
        r: Parity,
        /// Spin sign.
        spin: Spin,
    },
    /// The spin superposition sin θ |+⟩ + cos θ |−⟩ inside branch r = 1.
    SpinSuperposition {
        /// Spectrum constants of the level.
        params: OneParticleParams,
        /// Mixing angle θ.
        theta: f64,
    },
}

pub(crate) type Entries = [[BasisExpansion; 4]; 4];

pub(crate) fn zero_entries() -> Entries {
    std::array::from_fn(|_| std::array::from_fn(|_| BasisExpansion::zero()))
}

pub(crate) fn add_scaled_entries(target: &mut Entries, source: &Entries, weight: f64) {
    for i in 0..4 {
        for j in 0..4 {
            target[i][j].add_scaled(&source[i][j], weight);
        }
    }
}

/// Equal-time Wigner matrix: a 4×4 array of exact basis expansions plus
/// provenance metadata.
#[derive(Clone, Debug)]
pub struct WignerMatrix {
    entries: Entries,
    meta: StateMeta,
}

impl WignerMatrix {
    pub(crate) fn from_entries(entries: Entries, meta: StateMeta) -> WignerMatrix {
        WignerMatrix { entries, meta }
    }

    /// Entry (i, j) with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &BasisExpansion {
        &self.entries[i][j]
    }

    /// All sixteen entries.
    pub fn entries(&self) -> &Entries {
        &self.entries
    }

    /// Provenance metadata.
    pub fn meta(&self) -> &StateMeta {
        &self.meta
    }

    /// Phase-space probability density Tr[W γ⁰] as a basis expansion.
    pub fn trace_density(&self) -> BasisExpansion {
        let mut acc = BasisExpansion::zero();
        for (i, g) in GAMMA0.iter().enumerate() {
            acc.add_scaled(&self.entries[i][i], *g);
        }
        acc
    }

    /// Total integral of the probability density (1 for normalized states).
    pub fn normalization(&self) -> f64 {
        self.trace_density().integral()
    }

    /// Verify the pseudo-Hermiticity pattern W = γ⁰ Wᵀ γ⁰, i.e.
    /// W_ji = γ⁰ᵢᵢ γ⁰ⱼⱼ W_ij, at the coefficient level.
    ///
    /// Errors with [`Error::Inconsistent`] naming the first offending entry.
    pub fn check_pseudo_hermitian(&self) -> Result<()> {
        for (i, gi) in GAMMA0.iter().enumerate() {
            for (j, gj) in GAMMA0.iter().enumerate() {
                let mut diff = self.entries[j][i].clone();
                diff.add_scaled(&self.entries[i][j], -gi * gj);
                let worst = diff
                    .iter()
                    .map(|(_, c)| c.abs())
                    .fold(0.0f64, f64::max);
                if worst > 1e-12 {
                    return Err(Error::Inconsistent(format!(
                        "pseudo-Hermiticity violated at entry ({i}, {j}): residual {worst:e}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Evaluate the full matrix at one phase-space point.
    pub fn eval(&self, s: f64, kx: f64) -> Matrix4<f64> {
        Matrix4::from_fn(|i, j| self.entries[i][j].eval(s, kx))
    }
}

/// Exact Wigner bilinear of two spinor configurations: entry (i, j) collects
/// γ⁰ⱼⱼ cᵢ cⱼ over the component products, with Fₐ F_b mapping to 𝓛ₐ on equal
/// indices and to 𝓜_max(a,b) on adjacent ones.
pub(crate) fn exact_wigner(sa: &SpinorState, sb: &SpinorState) -> Result<Entries> {
    let mut entries = zero_entries();
    for (i, ca) in sa.components() {
        for (j, cb) in sb.components() {
            let gap = (ca.index - cb.index).abs();
            let label = match gap {
                0 => BasisLabel::l(ca.index)?,
                1 => BasisLabel::m(ca.index.max(cb.index))?,
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "component indices {} and {} differ by more than one",
                        ca.index, cb.index
                    )))
                }
            };
            entries[i][j].add_term(label, GAMMA0[j] * ca.coef * cb.coef);
        }
    }
    Ok(entries)
}

/// Wigner matrix of the pure level member (n, r, ±).
///
/// Errors with [`Error::Construction`] for the missing lowest-level members.
pub fn pure_state(params: &OneParticleParams, r: Parity, spin: Spin) -> Result<WignerMatrix> {
    let sp = spinor_state(params, r, spin)?;
    let entries = exact_wigner(&sp, &sp)?;
    let meta = StateMeta {
        descriptor: format!("{}:{r}:{spin}", params.n()),
        decomposition: Some(vec![DecompositionTerm {
            weight: 1.0,
            component: PureComponent::Basis {
                params: *params,
                r,
                spin,
            },
        }]),
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

/// Wigner matrix of the spin superposition
/// sin θ |n, 1, +⟩ + cos θ |n, 1, −⟩ inside a degenerate level n ≥ 1.
///
/// Errors with [`Error::Construction`] for n = 0, where the branch holds a
/// single member and no spin pair exists to superpose.
pub fn superposition(params: &OneParticleParams, theta: f64) -> Result<WignerMatrix> {
    if params.n() == 0 {
        return Err(Error::Construction(
            "the lowest level is non-degenerate per branch; no spin pair exists to superpose"
                .into(),
        ));
    }
    let up = spinor_state(params, Parity::One, Spin::Plus)?;
    let um = spinor_state(params, Parity::One, Spin::Minus)?;
    let wp = exact_wigner(&up, &up)?;
    let wm = exact_wigner(&um, &um)?;
    let cross = interference_entries(&up, &um)?;
    let (sin, cos) = theta.sin_cos();

    let mut entries = zero_entries();
    add_scaled_entries(&mut entries, &wp, sin * sin);
    add_scaled_entries(&mut entries, &wm, cos * cos);
    add_scaled_entries(&mut entries, &cross, sin * cos);

    let meta = StateMeta {
        descriptor: format!("theta={theta};n={}", params.n()),
        decomposition: Some(vec![DecompositionTerm {
            weight: 1.0,
            component: PureComponent::SpinSuperposition {
                params: *params,
                theta,
            },
        }]),
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

fn interference_entries(up: &SpinorState, um: &SpinorState) -> Result<Entries> {
    let xf = exact_wigner(up, um)?;
    let xr = exact_wigner(um, up)?;
    let mut cross = zero_entries();
    add_scaled_entries(&mut cross, &xf, 1.0);
    add_scaled_entries(&mut cross, &xr, 1.0);
    Ok(cross)
}

/// The interference term Ωₙ of the spin superposition: the symmetrized cross
/// bilinear of the two branch-1 members. It is traceless in the integrated
/// sense (its density integrates to 0) and is not a state by itself.
///
/// Errors with [`Error::Construction`] for n = 0.
pub fn spin_interference(params: &OneParticleParams) -> Result<WignerMatrix> {
    if params.n() == 0 {
        return Err(Error::Construction(
            "the lowest level is non-degenerate per branch; no interference term exists".into(),
        ));
    }
    let up = spinor_state(params, Parity::One, Spin::Plus)?;
    let um = spinor_state(params, Parity::One, Spin::Minus)?;
    let entries = interference_entries(&up, &um)?;
    let meta = StateMeta {
        descriptor: format!("interference;n={}", params.n()),
        decomposition: None,
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

/// Validated mixture weights paired with the descriptors they apply to.
///
/// Invariants: weights are non-negative and sum to 1 within 1e-12, and the
/// descriptors are pairwise distinct.
#[derive(Clone, Debug)]
pub struct EnsembleWeights {
    items: Vec<(String, f64)>,
}

impl EnsembleWeights {
    /// Validate and store (descriptor, weight) pairs.
    pub fn new(items: Vec<(String, f64)>) -> Result<EnsembleWeights> {
        if items.is_empty() {
            return Err(Error::Domain("ensemble weights cannot be empty".into()));
        }
        let mut sum = 0.0;
        for (d, w) in &items {
            if w.is_nan() || *w < 0.0 {
                return Err(Error::Domain(format!(
                    "weight for {d} must be non-negative, got {w}"
                )));
            }
            sum += w;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "ensemble weights must sum to 1, got {sum}"
            )));
        }
        for (i, (d, _)) in items.iter().enumerate() {
            if items[i + 1..].iter().any(|(e, _)| e == d) {
                return Err(Error::Domain(format!(
                    "ensemble descriptors must be distinct, `{d}` repeats"
                )));
            }
        }
        Ok(EnsembleWeights { items })
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    /// True when no components are stored (never, by construction).
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Iterate over (descriptor, weight) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.items.iter().map(|(d, w)| (d.as_str(), *w))
    }
}

/// Statistical mixture of previously constructed states.
///
/// The weights must pair one-to-one with the states, matching them by
/// descriptor. The result records the flattened decomposition when every
/// component carries one.
///
/// Errors with [`Error::Precondition`] on a length or descriptor mismatch.
pub fn mixture(states: &[WignerMatrix], weights: &EnsembleWeights) -> Result<WignerMatrix> {
    if states.len() != weights.len() {
        return Err(Error::Precondition(format!(
            "{} states paired with {} weights",
            states.len(),
            weights.len()
        )));
    }
    for (state, (desc, _)) in states.iter().zip(weights.iter()) {
        if state.meta().descriptor != desc {
            return Err(Error::Precondition(format!(
                "weight descriptor `{desc}` does not match state `{}`",
                state.meta().descriptor
            )));
        }
    }
    let mut entries = zero_entries();
    let mut decomposition = Some(Vec::new());
    let mut pieces = Vec::new();
    for (state, (desc, w)) in states.iter().zip(weights.iter()) {
        add_scaled_entries(&mut entries, &state.entries, w);
        pieces.push(format!("{w}*({desc})"));
        match (&mut decomposition, &state.meta().decomposition) {
            (Some(acc), Some(terms)) => {
                for t in terms {
                    if w * t.weight > 0.0 {
                        acc.push(DecompositionTerm {
                            weight: w * t.weight,
                            component: t.component.clone(),
                        });
                    }
                }
            }
            _ => decomposition = None,
        }
    }
    let meta = StateMeta {
        descriptor: format!("mix[{}]", pieces.join(" + ")),
        decomposition,
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

/// Two-component spin mixture sin²φ ω⁺ + cos²φ ω⁻ inside branch r = 1 of a
/// degenerate level n ≥ 1.
///
/// Errors with [`Error::Construction`] for n = 0.
pub fn spin_mixture(params: &OneParticleParams, phi: f64) -> Result<WignerMatrix> {
    if params.n() == 0 {
        return Err(Error::Construction(
            "the lowest level branch holds a single member; no spin pair exists to mix".into(),
        ));
    }
    let wp = pure_state(params, Parity::One, Spin::Plus)?;
    let wm = pure_state(params, Parity::One, Spin::Minus)?;
    let (sin, cos) = phi.sin_cos();
    let (w_plus, w_minus) = (sin * sin, cos * cos);

    let mut entries = zero_entries();
    add_scaled_entries(&mut entries, &wp.entries, w_plus);
    add_scaled_entries(&mut entries, &wm.entries, w_minus);

    let mut terms = Vec::new();
    for (w, src) in [(w_plus, &wp), (w_minus, &wm)] {
        if w > 0.0 {
            let decomp = src
                .meta()
                .decomposition
                .as_ref()
                .expect("pure states record their decomposition");
            terms.push(DecompositionTerm {
                weight: w,
                component: decomp[0].component.clone(),
            });
        }
    }
    let meta = StateMeta {
        descriptor: format!("phi={phi};n={}", params.n()),
        decomposition: Some(terms),
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

/// Add the equal-member mixture block of level `n` with total weight
/// `weight`: (weight/4) diag(𝓛_{n−1}, 𝓛ₙ, −𝓛_{n−1}, −𝓛ₙ) for n ≥ 1, and
/// (weight/2) diag(0, 𝓛₀, 0, −𝓛₀) for the two-member lowest level. Both
/// collapses are parameter-free.
pub(crate) fn add_level_block(entries: &mut Entries, n: u32, weight: f64) -> Result<()> {
    if n == 0 {
        let l0 = BasisLabel::l(0)?;
        entries[1][1].add_term(l0, 0.5 * weight);
        entries[3][3].add_term(l0, -0.5 * weight);
    } else {
        let lower = BasisLabel::l(n as i32 - 1)?;
        let upper = BasisLabel::l(n as i32)?;
        entries[0][0].add_term(lower, 0.25 * weight);
        entries[1][1].add_term(upper, 0.25 * weight);
        entries[2][2].add_term(lower, -0.25 * weight);
        entries[3][3].add_term(upper, -0.25 * weight);
    }
    Ok(())
}

/// The maximally mixed state of level n ≥ 1: the equal-weight mixture of the
/// four degenerate members, which collapses to the parameter-free diagonal
/// (1/4) diag(𝓛_{n−1}, 𝓛ₙ, −𝓛_{n−1}, −𝓛ₙ) for every mass and momentum.
///
/// No decomposition is recorded: the collapsed form no longer determines the
/// spectrum constants of its components.
///
/// Errors with [`Error::Construction`] for n = 0, where only two members
/// exist; mix the two ground members explicitly instead.
pub fn maximally_mixed(n: u32) -> Result<WignerMatrix> {
    if n == 0 {
        return Err(Error::Construction(
            "the lowest level has two members, not four; mix the two ground members explicitly"
                .into(),
        ));
    }
    let mut entries = zero_entries();
    add_level_block(&mut entries, n, 1.0)?;
    let meta = StateMeta {
        descriptor: format!("maxmix;n={n}"),
        decomposition: None,
    };
    Ok(WignerMatrix::from_entries(entries, meta))
}

/// Numerical Wigner bilinear of two equal-energy spinor configurations at one
/// phase-space point, via direct Fourier-kernel quadrature with the same
/// equal-time realification as the exact route: diagonal index pairs keep
/// (1/π) Re I, adjacent pairs keep (√2/π) Re I.
///
/// Errors with [`Error::Precondition`] when the energies differ (the
/// equal-time reduction assumes stationary bilinears) and with
/// [`Error::Numerical`] if the kernel quadrature fails to converge.
pub fn wigner_from_spinors(
    sa: &SpinorState,
    sb: &SpinorState,
    s: f64,
    kx: f64,
) -> Result<Matrix4<f64>> {
    let (ea, eb) = (sa.energy(), sb.energy());
    let equal = (ea.is_infinite() && eb.is_infinite()) || (ea - eb).abs() <= 1e-9 * ea.abs().max(1.0);
    if !equal {
        return Err(Error::Precondition(format!(
            "equal-time bilinears require equal energies, got {ea} and {eb}"
        )));
    }
    let mut out = Matrix4::zeros();
    for (i, ca) in sa.components() {
        for (j, cb) in sb.components() {
            let gap = (ca.index - cb.index).abs();
            let kernel = kernel_integral(ca.index, cb.index, s, kx)?;
            let realified = match gap {
                0 => kernel.re / std::f64::consts::PI,
                1 => std::f64::consts::SQRT_2 * kernel.re / std::f64::consts::PI,
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "component indices {} and {} differ by more than one",
                        ca.index, cb.index
                    )))
                }
            };
            out[(i, j)] += GAMMA0[j] * ca.coef * cb.coef * realified;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn params(n: u32) -> OneParticleParams {
        OneParticleParams::new(n, 1.0, 0.5, 1.0).unwrap()
    }

    // ==================== Spectrum constants ====================

    #[test]
    fn params_satisfy_closure_and_energy_formula() {
        for n in 0..=4u32 {
            for &(m, kz) in &[(0.0, 0.0), (1.0, 0.0), (1.0, 0.7), (2.5, 1.3)] {
                if n == 0 && m == 0.0 && kz == 0.0 {
                    continue; // zero-energy member checked separately
                }
                let p = OneParticleParams::new(n, m, kz, 1.0).unwrap();
                let e = (m * m + kz * kz + 2.0 * n as f64).sqrt();
                assert_abs_diff_eq!(p.e_n(), e, epsilon = 1e-14);
                assert_abs_diff_eq!(
                    p.eta_n() * (1.0 + p.a_n().powi(2) + p.b_n().powi(2)),
                    1.0,
                    epsilon = 1e-14
                );
                assert_abs_diff_eq!(p.kappa(), (m * m + kz * kz) / 2.0, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn lowest_level_has_zero_magnetic_mixing() {
        let p = OneParticleParams::new(0, 1.0, 0.8, 1.0).unwrap();
        assert_eq!(p.b_n(), 0.0);
    }

    #[test]
    fn massless_rest_ground_member_takes_limit_values() {
        let p = OneParticleParams::new(0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(p.e_n(), 0.0);
        assert_eq!(p.a_n(), 0.0);
        assert_eq!(p.b_n(), 0.0);
        assert_eq!(p.eta_n(), 1.0);
    }

    #[test]
    fn massless_level_at_rest_saturates_b() {
        let p = OneParticleParams::new(3, 0.0, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(p.b_n(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.eta_n(), 0.5, epsilon = 1e-15);
        assert_eq!(p.a_n(), 0.0);
    }

    #[test]
    fn massless_from_b_roundtrips_and_handles_endpoints() {
        for &b in &[0.2, 0.5, 0.9, 1.0] {
            let p = OneParticleParams::massless_from_b(2, b, 1.0).unwrap();
            assert_abs_diff_eq!(p.b_n(), b, epsilon = 1e-12);
            assert_eq!(p.mass(), 0.0);
        }
        let limit = OneParticleParams::massless_from_b(2, 0.0, 1.0).unwrap();
        assert!(limit.e_n().is_infinite());
        assert_eq!(limit.a_n(), 1.0);
        assert_eq!(limit.b_n(), 0.0);
        assert_eq!(limit.eta_n(), 0.5);
    }

    #[test]
    fn params_reject_bad_inputs() {
        assert!(matches!(
            OneParticleParams::new(1, -1.0, 0.0, 1.0),
            Err(crate::Error::Domain(_))
        ));
        assert!(matches!(
            OneParticleParams::new(1, 1.0, -0.5, 1.0),
            Err(crate::Error::Domain(_))
        ));
        assert!(matches!(
            OneParticleParams::new(1, 1.0, 0.0, 0.0),
            Err(crate::Error::Domain(_))
        ));
        assert!(matches!(
            OneParticleParams::massless_from_b(0, 0.5, 1.0),
            Err(crate::Error::Domain(_))
        ));
        assert!(matches!(
            OneParticleParams::massless_from_b(1, 1.5, 1.0),
            Err(crate::Error::Domain(_))
        ));
    }

    // ==================== Spinors ====================

    #[test]
    fn spinors_are_normalized_componentwise() {
        let p = params(2);
        for (r, spin) in [
            (Parity::One, Spin::Plus),
            (Parity::One, Spin::Minus),
            (Parity::Two, Spin::Plus),
            (Parity::Two, Spin::Minus),
        ] {
            let sp = spinor_state(&p, r, spin).unwrap();
            let norm: f64 = sp.components().map(|(_, c)| c.coef * c.coef).sum();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn lowest_level_keeps_two_members() {
        let p = OneParticleParams::new(0, 1.0, 0.4, 1.0).unwrap();
        assert!(spinor_state(&p, Parity::One, Spin::Minus).is_ok());
        assert!(spinor_state(&p, Parity::Two, Spin::Plus).is_ok());
        assert!(matches!(
            spinor_state(&p, Parity::One, Spin::Plus),
            Err(crate::Error::Construction(_))
        ));
        assert!(matches!(
            spinor_state(&p, Parity::Two, Spin::Minus),
            Err(crate::Error::Construction(_))
        ));
    }

    #[test]
    fn config_spinor_matches_component_table() {
        let p = params(1);
        let s = 0.6;
        let eta_root = p.eta_n().sqrt();
        let f0 = crate::specfun::hermite_gaussian(0, s);
        let f1 = crate::specfun::hermite_gaussian(1, s);
        let got = config_spinor(&p, Parity::One, Spin::Plus, s).unwrap();
        assert_abs_diff_eq!(got[0].re, eta_root * f0, epsilon = 1e-14);
        assert_abs_diff_eq!(got[1].re, 0.0);
        assert_abs_diff_eq!(got[2].re, eta_root * p.a_n() * f0, epsilon = 1e-14);
        assert_abs_diff_eq!(got[3].re, -eta_root * p.b_n() * f1, epsilon = 1e-14);
        assert!(got.iter().all(|c| c.im == 0.0));
    }

    // ==================== Pure states ====================

    #[test]
    fn pure_states_are_normalized_and_pseudo_hermitian() {
        let p = params(2);
        for (r, spin) in [
            (Parity::One, Spin::Plus),
            (Parity::One, Spin::Minus),
            (Parity::Two, Spin::Plus),
            (Parity::Two, Spin::Minus),
        ] {
            let w = pure_state(&p, r, spin).unwrap();
            assert_abs_diff_eq!(w.normalization(), 1.0, epsilon = 1e-13);
            w.check_pseudo_hermitian().unwrap();
        }
    }

    #[test]
    fn pure_state_diagonal_carries_expected_labels() {
        let p = params(2);
        let w = pure_state(&p, Parity::One, Spin::Plus).unwrap();
        let eta = p.eta_n();
        assert_abs_diff_eq!(
            w.entry(0, 0).coef(BasisLabel::l(1).unwrap()),
            eta,
            epsilon = 1e-14
        );
        assert!(w.entry(1, 1).is_empty());
        assert_abs_diff_eq!(
            w.entry(2, 2).coef(BasisLabel::l(1).unwrap()),
            -eta * p.a_n().powi(2),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            w.entry(3, 3).coef(BasisLabel::l(2).unwrap()),
            -eta * p.b_n().powi(2),
            epsilon = 1e-14
        );
    }

    #[test]
    fn pure_state_density_matches_closed_form() {
        let p = params(3);
        let (eta, a, b) = (p.eta_n(), p.a_n(), p.b_n());
        let wp = pure_state(&p, Parity::One, Spin::Plus).unwrap();
        let d = wp.trace_density();
        assert_abs_diff_eq!(
            d.coef(BasisLabel::l(2).unwrap()),
            eta * (1.0 + a * a),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            d.coef(BasisLabel::l(3).unwrap()),
            eta * b * b,
            epsilon = 1e-14
        );

        let wm = pure_state(&p, Parity::One, Spin::Minus).unwrap();
        let d = wm.trace_density();
        assert_abs_diff_eq!(
            d.coef(BasisLabel::l(3).unwrap()),
            eta * (1.0 + a * a),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            d.coef(BasisLabel::l(2).unwrap()),
            eta * b * b,
            epsilon = 1e-14
        );
    }

    // ==================== Superpositions ====================

    #[test]
    fn superposition_endpoints_reduce_to_pure_members() {
        let p = params(1);
        let w0 = superposition(&p, 0.0).unwrap();
        let wm = pure_state(&p, Parity::One, Spin::Minus).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let mut diff = w0.entry(i, j).clone();
                diff.add_scaled(wm.entry(i, j), -1.0);
                assert!(diff.iter().all(|(_, c)| c.abs() < 1e-15));
            }
        }
        let w1 = superposition(&p, std::f64::consts::FRAC_PI_2).unwrap();
        let wp = pure_state(&p, Parity::One, Spin::Plus).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let mut diff = w1.entry(i, j).clone();
                diff.add_scaled(wp.entry(i, j), -1.0);
                assert!(diff.iter().all(|(_, c)| c.abs() < 1e-14));
            }
        }
    }

    #[test]
    fn superposition_is_normalized_for_any_angle() {
        let p = params(2);
        for &theta in &[0.3, std::f64::consts::FRAC_PI_4, 1.2, 2.8] {
            let w = superposition(&p, theta).unwrap();
            assert_abs_diff_eq!(w.normalization(), 1.0, epsilon = 1e-13);
            w.check_pseudo_hermitian().unwrap();
        }
    }

    #[test]
    fn interference_term_integrates_to_zero() {
        let p = params(1);
        let omega = spin_interference(&p).unwrap();
        assert_abs_diff_eq!(omega.normalization(), 0.0, epsilon = 1e-14);
        omega.check_pseudo_hermitian().unwrap();
    }

    #[test]
    fn superposition_rejects_lowest_level() {
        let p = OneParticleParams::new(0, 1.0, 0.2, 1.0).unwrap();
        assert!(matches!(
            superposition(&p, 0.5),
            Err(crate::Error::Construction(_))
        ));
        assert!(matches!(
            spin_interference(&p),
            Err(crate::Error::Construction(_))
        ));
    }

    // ==================== Mixtures ====================

    #[test]
    fn ensemble_weights_validate_their_invariants() {
        assert!(EnsembleWeights::new(vec![]).is_err());
        assert!(EnsembleWeights::new(vec![("a".into(), 0.5), ("b".into(), 0.6)]).is_err());
        assert!(EnsembleWeights::new(vec![("a".into(), -0.1), ("b".into(), 1.1)]).is_err());
        assert!(EnsembleWeights::new(vec![("a".into(), 0.5), ("a".into(), 0.5)]).is_err());
        assert!(EnsembleWeights::new(vec![("a".into(), 0.25), ("b".into(), 0.75)]).is_ok());
    }

    #[test]
    fn mixture_rejects_mismatched_pairings() {
        let p = params(1);
        let wp = pure_state(&p, Parity::One, Spin::Plus).unwrap();
        let wm = pure_state(&p, Parity::One, Spin::Minus).unwrap();
        let weights = EnsembleWeights::new(vec![("1:1:+".into(), 0.5), ("1:1:-".into(), 0.5)])
            .unwrap();
        assert!(mixture(std::slice::from_ref(&wp), &weights).is_err());
        let wrong =
            EnsembleWeights::new(vec![("1:1:+".into(), 0.5), ("1:2:+".into(), 0.5)]).unwrap();
        assert!(matches!(
            mixture(&[wp.clone(), wm.clone()], &wrong),
            Err(crate::Error::Precondition(_))
        ));
        assert!(mixture(&[wp, wm], &weights).is_ok());
    }

    #[test]
    fn spin_mixture_interpolates_pure_members() {
        let p = params(1);
        let w = spin_mixture(&p, 0.7).unwrap();
        assert_abs_diff_eq!(w.normalization(), 1.0, epsilon = 1e-13);
        let terms = w.meta().decomposition.as_ref().unwrap();
        let total: f64 = terms.iter().map(|t| t.weight).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn equal_four_member_mixture_collapses_to_maximally_mixed() {
        // The collapse is parameter-free: any mass and momentum give the same
        // diagonal form.
        for p in [params(1), OneParticleParams::new(1, 2.0, 1.7, 1.0).unwrap()] {
            let members = [
                pure_state(&p, Parity::One, Spin::Plus).unwrap(),
                pure_state(&p, Parity::One, Spin::Minus).unwrap(),
                pure_state(&p, Parity::Two, Spin::Plus).unwrap(),
                pure_state(&p, Parity::Two, Spin::Minus).unwrap(),
            ];
            let weights = EnsembleWeights::new(
                members
                    .iter()
                    .map(|m| (m.meta().descriptor.clone(), 0.25))
                    .collect(),
            )
            .unwrap();
            let mixed = mixture(&members, &weights).unwrap();
            let target = maximally_mixed(1).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    let mut diff = mixed.entry(i, j).clone();
                    diff.add_scaled(target.entry(i, j), -1.0);
                    let worst = diff.iter().map(|(_, c)| c.abs()).fold(0.0f64, f64::max);
                    assert!(worst < 1e-14, "entry ({i},{j}) residual {worst:e}");
                }
            }
        }
    }

    #[test]
    fn maximally_mixed_has_expected_diagonal() {
        let w = maximally_mixed(3).unwrap();
        assert_abs_diff_eq!(w.entry(0, 0).coef(BasisLabel::l(2).unwrap()), 0.25);
        assert_abs_diff_eq!(w.entry(1, 1).coef(BasisLabel::l(3).unwrap()), 0.25);
        assert_abs_diff_eq!(w.entry(2, 2).coef(BasisLabel::l(2).unwrap()), -0.25);
        assert_abs_diff_eq!(w.entry(3, 3).coef(BasisLabel::l(3).unwrap()), -0.25);
        assert_abs_diff_eq!(w.normalization(), 1.0, epsilon = 1e-15);
        assert!(matches!(
            maximally_mixed(0),
            Err(crate::Error::Construction(_))
        ));
    }

    // ==================== Numerical kernel route ====================

    #[test]
    fn exact_and_kernel_routes_agree_pointwise() {
        let p = params(1);
        let up = spinor_state(&p, Parity::One, Spin::Plus).unwrap();
        let exact = pure_state(&p, Parity::One, Spin::Plus).unwrap();
        for &(s, kx) in &[(0.0, 0.0), (0.5, -0.4)] {
            let numeric = wigner_from_spinors(&up, &up, s, kx).unwrap();
            let algebra = exact.eval(s, kx);
            for i in 0..4 {
                for j in 0..4 {
                    assert!(
                        (numeric[(i, j)] - algebra[(i, j)]).abs() < 1e-7,
                        "entry ({i},{j}) at ({s},{kx}): {} vs {}",
                        numeric[(i, j)],
                        algebra[(i, j)]
                    );
                }
            }
        }
    }

    #[test]
    fn kernel_route_rejects_unequal_energies() {
        let p1 = params(1);
        let p2 = params(2);
        let a = spinor_state(&p1, Parity::One, Spin::Minus).unwrap();
        let b = spinor_state(&p2, Parity::One, Spin::Minus).unwrap();
        assert!(matches!(
            wigner_from_spinors(&a, &b, 0.0, 0.0),
            Err(crate::Error::Precondition(_))
        ));
    }
}
