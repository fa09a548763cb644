//! Exact solutions of the Riesz and spectral fractional Laplacian Dirichlet
//! problems on the interval `(-1,1)` and the square `(-1,1)^2`.
//!
//! The library covers two right-hand sides: the constant `f = 1` (homogeneous
//! Dirichlet data) and the Dirac delta `f = delta_0` (inhomogeneous data taken
//! from the fundamental solution). The Riesz-formulation solutions are closed
//! forms; the spectral-formulation solutions are eigenfunction series with
//! controlled truncation. On top of the evaluators sit boundary-layer ratio
//! tables, a log-exponent estimator for the `s = 1/2` layer, divergence probes
//! for the series that blow up at the origin, and an independent brute-force
//! oracle layer used by the test suite.

pub mod asymptotics;
pub mod domain;
pub mod lifting;
pub mod oracle;
pub mod probe;
pub mod riesz;
pub mod special;
pub mod spectral;
mod sum;

pub use domain::{
    Accumulation, Field, FieldGrid, Formulation, FracPower, Grid1D, Grid2D, TruncationPolicy,
};
pub use special::{fundamental_constant, gamma, riesz_ball_constant, NormConstants};
pub use sum::KahanSum;

/// Errors reported by the evaluators and table builders.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    /// `2s = n`: the power-law fundamental solution does not exist, the
    /// logarithmic one applies instead.
    #[error("log-case: 2s = n, use the logarithmic fundamental solution")]
    LogCase,
    #[error("singularity: {0}")]
    Singular(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("accuracy failure: {0}")]
    Accuracy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
