//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two objects built on different grids (or configs) were combined.
    #[error("mismatched discretizations: {0}")]
    ConfigMismatch(String),

    /// A field coefficient became NaN or infinite during time integration.
    #[error("solution lost finiteness at step {step}")]
    NonFinite { step: usize },

    /// Invalid user-facing configuration (bad ranges, inconsistent sizes).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Armijo backtracking could not find an acceptable step.
    #[error("line search stalled at iteration {iteration} (vi residual {vi_residual:.3e})")]
    LineSearchStalled {
        iteration: usize,
        vi_residual: f64,
        report: Box<crate::optim::OptimizeReport>,
    },

    /// Every control node sits on a strongly active bound; the discrete
    /// critical cone is trivial.
    #[error("no critical directions: the strongly active set covers the whole control grid")]
    NoCriticalDirections,

    /// The nominal solution handed to the stability sweep fails its
    /// certification preconditions.
    #[error("nominal solution not certified: {0}")]
    NominalNotCertified(String),

    /// Malformed snapshot or manifest file.
    #[error("bad file format: {0}")]
    BadFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
