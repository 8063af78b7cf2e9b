//! Error type shared across the laboratory.

use thiserror::Error;

/// Errors produced by geometry, sampling, estimation, and harness code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("non-finite coordinate encountered: {0}")]
    NonFinite(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rank-deficient jacobian (chart {chart}, smallest singular value {sigma_min:.3e})")]
    RankDeficient { chart: usize, sigma_min: f64 },

    #[error("degenerate density/parametrization (acceptance rate {rate:.3e})")]
    DegenerateSampler { rate: f64 },

    #[error("manifold not contained in the clutter box")]
    ManifoldOutsideBox,

    #[error("net too coarse: spacing {got:.3e} exceeds required {required:.3e}")]
    NetTooCoarse { got: f64, required: f64 },

    #[error("bandwidth below numeric floor: {0}")]
    NumericFloor(String),

    #[error("kernel property verification failure: {0}")]
    KernelProperty(String),

    #[error("calibrated threshold interval empty ({0}): k or L too small for target delta")]
    EmptyBracket(String),

    #[error("empty truncated set: {0}")]
    EmptyTruncatedSet(&'static str),

    #[error("grid mismatch between density fields")]
    GridMismatch,

    #[error("degenerate fit: {0}")]
    DegenerateFit(&'static str),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for configuration errors, 3 when a
    /// numeric floor is hit, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidParameter(_) => 2,
            Error::NumericFloor(_) => 3,
            _ => 1,
        }
    }
}
