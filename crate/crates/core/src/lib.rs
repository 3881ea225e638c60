#![forbid(unsafe_code)]
#![warn(missing_docs)]

//! Equal-time Wigner matrices for relativistic Landau levels.
//!
//! This crate constructs the 4×4 matrix-valued phase-space distributions of a
//! Dirac particle in a uniform magnetic field and evaluates quantum-information
//! and thermodynamic quantities on them. Everything is organized in five layers:
//!
//! * [`specfun`] — Laguerre and Hermite polynomials, Bernoulli polynomials, and
//!   the Hurwitz zeta function with analytic continuation (an Euler–Maclaurin
//!   production path plus a globally convergent series oracle).
//! * [`phase_space`] — the oscillator basis functions 𝓛ₙ and 𝓜ₙ, their exact
//!   overlap table (the integration engine used by every quantifier), the
//!   polar-coordinate quadrature oracle, and the Fourier kernel oracle.
//! * [`spinor_wigner`] — builds Wigner matrices for pure Landau-level states,
//!   degenerate-subspace superpositions, mixtures, the maximally mixed level,
//!   the geometric (Gaussian) family, thermal ensembles, and the graphene-analog
//!   level map.
//! * [`infometrics`] — purity, reduced spin-parity density, linear entropies,
//!   mutual information, concurrence (flip-integral, ensemble-averaged and
//!   Wootters forms), and entanglement of formation.
//! * [`thermo`] — partition function by direct summation and by a Hurwitz-zeta
//!   expansion, internal energy, specific heat, free energy, entropy, thermal
//!   purity, and the closed-form thermal information quantifiers.
//!
//! # Conventions
//!
//! Dimensionless units are used throughout: the field strength is scaled to
//! e𝓑 = 1 so phase-space coordinates are the dimensionless pair (s, kₓ), and
//! thermodynamics uses the inverse dimensionless temperature μ = √(2e𝓑)/T.
//! The Dirac representation fixes γ⁰ = diag(1, 1, −1, −1), and the two-qubit
//! flip operator σ_y⊗σ_y = −iγ² acts as the antidiagonal sign pattern
//! (−1, 1, 1, −1).
//!
//! # Example
//!
//! ```
//! use landau_wigner::spinor_wigner::{OneParticleParams, Parity, Spin, pure_state};
//! use landau_wigner::infometrics::{purity, concurrence_sq_pure};
//!
//! let params = OneParticleParams::new(1, 1.0, 0.5, 1.0).unwrap();
//! let w = pure_state(&params, Parity::One, Spin::Minus).unwrap();
//! let p = purity(&w);
//! assert!((p - 1.0).abs() < 1e-12);
//!
//! let c2 = concurrence_sq_pure(&w).unwrap();
//! let expected = 2.0 * (params.eta_n() * params.b_n()).powi(2);
//! assert!((c2 - expected).abs() < 1e-12);
//! ```

pub mod infometrics;
pub mod phase_space;
pub mod specfun;
pub mod spinor_wigner;
pub mod thermo;

/// Library version, embedded by the CLI in reproducibility headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation was requested exactly at a pole.
    #[error("pole error: {0}")]
    Pole(String),

    /// The requested state cannot be constructed (missing degeneracy, no map).
    #[error("construction error: {0}")]
    Construction(String),

    /// A documented precondition of the operation was violated.
    #[error("precondition error: {0}")]
    Precondition(String),

    /// The requested quantity is not computable from the recorded metadata.
    #[error("unavailable result: {0}")]
    Unavailable(String),

    /// An internal consistency check failed on intermediate data.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    /// A numerical routine exhausted its node budget before converging.
    #[error(
        "numerical failure in {context}: best estimate {best_estimate:e}, error bound {error_bound:e}"
    )]
    Numerical {
        /// What was being computed when the budget ran out.
        context: String,
        /// Best estimate available at that point.
        best_estimate: f64,
        /// Estimated error bound on `best_estimate`.
        error_bound: f64,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
