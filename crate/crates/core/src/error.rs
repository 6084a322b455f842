use std::io;

use thiserror::Error;

/// Errors raised anywhere in the optimizer, benchmark and harness layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index sets overlap or leave gaps in 0..{dimension}")]
    OverlapOrGap { dimension: usize },

    #[error("index {index} out of range for dimension {dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },

    #[error("evaluation budget of {budget} FEs exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("non-finite objective value or input")]
    NonFiniteValue,

    #[error("dimension {got} too small, need at least {min}")]
    DimensionTooSmall { got: usize, min: usize },

    #[error("incompatible dimensions: {0}")]
    IncompatibleDimensions(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid group count {groups} for dimension {dimension}")]
    InvalidGroupCount { groups: usize, dimension: usize },

    #[error("grid of {size} points exceeds the cap of {cap}")]
    GridTooLarge { size: u128, cap: u64 },

    #[error("probability {0} outside [0, 1]")]
    OutOfRangeProbability(f64),

    #[error("trace window has fewer than two positive values")]
    NonPositiveValues,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("worker did not answer within {0:?}")]
    WorkerTimeout(std::time::Duration),

    #[error("worker crashed: {0}")]
    WorkerCrashed(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
