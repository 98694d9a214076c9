use thiserror::Error;

/// Errors surfaced by the sampler library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite input coordinate at index {index}")]
    NonFiniteInput { index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown strategy '{name}' for {family}; available: {available:?}")]
    UnknownStrategy {
        family: &'static str,
        name: String,
        available: &'static [&'static str],
    },

    #[error(
        "all importance weights are zero; the target is unreachable from the current ensemble"
    )]
    AllWeightsZero,

    #[error("L-kernel fit failed: {0}")]
    LKernelFit(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
