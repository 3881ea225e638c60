//! Spin-parity concurrence functionals and two-qubit entanglement measures.
//!
//! The four Dirac indices factor into two qubits (parity block ⊗ spin), and
//! the spin flip on both qubits is the matrix S = σ_y ⊗ σ_y, which acts on
//! column j by moving it to row 3 − j with sign pattern (−1, +1, +1, −1).
//! Three routes to a squared concurrence coexist here:
//!
//! * [`flip_trace_sq`]: the phase-space functional
//!   C² = 2π ∬ Tr[(γ⁰ W S)(γ⁰ W S)] evaluated exactly on basis coefficients.
//!   For the degenerate-level pure states it is the squared spin-parity
//!   concurrence; [`concurrence_sq_pure`] guards it with a purity check.
//! * closed formulas for recorded pure components
//!   ([`concurrence_sq_formula`], [`concurrence_sq_recorded`]) and their
//!   ensemble weighting ([`concurrence_sq_ensemble`]).
//! * [`wootters_concurrence`]: the eigenvalue construction on a reduced 4×4
//!   density matrix, with [`eof_from_concurrence`] mapping the result to the
//!   entanglement of formation in bits.
//!
//! The routes measure different things on cross-branch superpositions: the
//! flip functional keeps phase-space-resolved mode correlations that the
//! reduced-matrix route traces out, so they are never collapsed into one
//! implementation.

use nalgebra::Matrix4;

use crate::spinor_wigner::{EnsembleWeights, PureComponent, WignerMatrix, GAMMA0};
use crate::{Error, Result};

/// Column permutation of S = σ_y ⊗ σ_y.
const FLIP_PERM: [usize; 4] = [3, 2, 1, 0];
/// Column signs of S = σ_y ⊗ σ_y.
const FLIP_SIGN: [f64; 4] = [-1.0, 1.0, 1.0, -1.0];

/// The flip functional 2π ∬ Tr[(γ⁰ W S)(γ⁰ W S)] on basis coefficients.
///
/// Equals the squared spin-parity concurrence on pure degenerate-level
/// states. On other inputs it is still a well-defined quadratic functional,
/// but not necessarily a concurrence; see [`concurrence_sq_pure`] for the
/// guarded version.
pub fn flip_trace_sq(w: &WignerMatrix) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            // K_ij = gamma0_i sign_j W_(i, perm_j); the trace pairs K_ij K_ji.
            let factor = GAMMA0[i] * GAMMA0[j] * FLIP_SIGN[i] * FLIP_SIGN[j];
            acc += factor * w.entry(i, FLIP_PERM[j]).overlap(w.entry(j, FLIP_PERM[i]));
        }
    }
    acc
}

/// Squared spin-parity concurrence of a pure state via the flip functional.
///
/// Errors with [`Error::Precondition`] when the purity deviates from 1 by
/// more than 1e-10; mixed states need the ensemble routes.
pub fn concurrence_sq_pure(w: &WignerMatrix) -> Result<f64> {
    let p = super::purity(w);
    if (p - 1.0).abs() > 1e-10 {
        return Err(Error::Precondition(format!(
            "`{}` has purity {p}, not a pure state",
            w.meta().descriptor
        )));
    }
    Ok(flip_trace_sq(w).max(0.0))
}

/// Closed-form squared concurrence of one recorded pure component:
/// 2(ηB)² for a degenerate-level member and 2η²(B cos 2θ − A sin 2θ)² for
/// the spin superposition at angle θ.
pub fn concurrence_sq_formula(component: &PureComponent) -> f64 {
    match component {
        PureComponent::Basis { params, .. } => {
            let v = params.eta_n() * params.b_n();
            2.0 * v * v
        }
        PureComponent::SpinSuperposition { params, theta } => {
            let (sin2, cos2) = (2.0 * theta).sin_cos();
            let v = params.eta_n() * (params.b_n() * cos2 - params.a_n() * sin2);
            2.0 * v * v
        }
    }
}

/// Ensemble squared concurrence from a recorded decomposition: the weighted
/// sum of the component formulas.
///
/// Errors with [`Error::Unavailable`] when the state carries no
/// decomposition (collapsed mixtures forget their components).
pub fn concurrence_sq_recorded(w: &WignerMatrix) -> Result<f64> {
    let terms = w.meta().decomposition.as_ref().ok_or_else(|| {
        Error::Unavailable(format!(
            "`{}` records no pure decomposition; build the ensemble explicitly",
            w.meta().descriptor
        ))
    })?;
    Ok(terms
        .iter()
        .map(|t| t.weight * concurrence_sq_formula(&t.component))
        .sum())
}

/// Ensemble squared concurrence of explicit pure states: Σ wᵢ C²(ψᵢ), with
/// each component evaluated through the guarded flip functional.
///
/// Errors with [`Error::Precondition`] on a pairing mismatch or an impure
/// component.
pub fn concurrence_sq_ensemble(
    states: &[WignerMatrix],
    weights: &EnsembleWeights,
) -> Result<f64> {
    if states.len() != weights.len() {
        return Err(Error::Precondition(format!(
            "{} states paired with {} weights",
            states.len(),
            weights.len()
        )));
    }
    let mut acc = 0.0;
    for (state, (desc, weight)) in states.iter().zip(weights.iter()) {
        if state.meta().descriptor != desc {
            return Err(Error::Precondition(format!(
                "weight descriptor `{desc}` does not match state `{}`",
                state.meta().descriptor
            )));
        }
        acc += weight * concurrence_sq_pure(state)?;
    }
    Ok(acc)
}

fn flip_matrix() -> Matrix4<f64> {
    let mut s = Matrix4::zeros();
    for j in 0..4 {
        s[(FLIP_PERM[j], j)] = FLIP_SIGN[j];
    }
    s
}

fn symmetric_sqrt(m: &Matrix4<f64>) -> Matrix4<f64> {
    let eig = m.symmetric_eigen();
    let roots = eig.eigenvalues.map(|v| v.max(0.0).sqrt());
    let mut acc = Matrix4::zeros();
    for k in 0..4 {
        let v = eig.eigenvectors.column(k).into_owned();
        let vt = v.transpose();
        acc += v * vt * roots[k];
    }
    acc
}

/// Wootters concurrence of a real symmetric 4×4 density matrix: the ordered
/// square-root eigenvalues ω₁ ≥ ω₂ ≥ ω₃ ≥ ω₄ of √ρ ρ̃ √ρ with ρ̃ = S ρ S
/// give C = max(0, ω₁ − ω₂ − ω₃ − ω₄).
///
/// Errors with [`Error::Domain`] when the input is not symmetric within
/// 1e-10, not trace one within 1e-8, or has an eigenvalue below −1e-10
/// (smaller negative noise is clamped to zero).
pub fn wootters_concurrence(rho: &Matrix4<f64>) -> Result<f64> {
    let asym = (rho - rho.transpose()).abs().max();
    if asym > 1e-10 {
        return Err(Error::Domain(format!(
            "density matrix is not symmetric, max deviation {asym:e}"
        )));
    }
    if (rho.trace() - 1.0).abs() > 1e-8 {
        return Err(Error::Domain(format!(
            "density matrix trace {} deviates from 1",
            rho.trace()
        )));
    }
    let eig = rho.symmetric_eigen();
    if eig.eigenvalues.min() < -1e-10 {
        return Err(Error::Domain(format!(
            "density matrix has negative eigenvalue {}",
            eig.eigenvalues.min()
        )));
    }

    let root = symmetric_sqrt(rho);
    let s = flip_matrix();
    let tilde = s * rho * s;
    let mut m = root * tilde * root;
    m = (m + m.transpose()) * 0.5;
    let mut omegas: Vec<f64> = m
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .map(|v| v.max(0.0).sqrt())
        .collect();
    omegas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((omegas[0] - omegas[1] - omegas[2] - omegas[3]).max(0.0))
}

/// Entanglement of formation in bits from a concurrence C ∈ [0, 1]:
/// the binary entropy of (1 + √(1 − C²))/2.
///
/// Errors with [`Error::Domain`] outside the unit interval (noise up to
/// 1e-12 beyond either end is clamped).
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::Domain(format!(
            "concurrence must lie in [0, 1], got {c}"
        )));
    }
    let c = c.clamp(0.0, 1.0);
    let x = 0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt());
    let h = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    Ok(h(x) + h(1.0 - x))
}
