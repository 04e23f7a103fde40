use thiserror::Error;

/// Errors raised across the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("box dimensions must be positive, got {rows}x{cols}")]
    EmptyBox { rows: usize, cols: usize },

    #[error("cannot stack {lambda} under a {width}-wide rectangle")]
    StackTooWide { width: usize, lambda: String },

    #[error("invalid tuple: {}", .0.join(", "))]
    InvalidTuple(Vec<String>),

    #[error("bigrassmannian index constraint violated: {0}")]
    IndexConstraint(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("instance too large: {measure} = {value} exceeds limit {limit}")]
    TooLarge {
        measure: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
