use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {n} is outside the window [0, {horizon})")]
    OutOfWindow { n: u64, horizon: u64 },

    #[error("message source exhausted: bit {index} requested, only {len} available")]
    SourceExhausted { index: u64, len: u64 },

    #[error("invalid threshold sequence: {0}")]
    InvalidThresholds(String),

    #[error("threshold search exhausted below {bound}: {reason}")]
    ThresholdSearchExhausted { bound: u64, reason: String },

    #[error("insufficient sample: {0}")]
    InsufficientSample(String),

    #[error("invalid sample: {0}")]
    InvalidSample(String),

    #[error("inconsistent sample: contains both {even} and {odd}")]
    InconsistentSample { even: u64, odd: u64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("window too small: {0}")]
    Horizon(String),

    #[error("enumeration budget of {budget} exceeded after {done} checks")]
    BudgetExceeded { done: u64, budget: u64 },

    #[error("construction invariant violated: {0}")]
    InvariantViolation(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
