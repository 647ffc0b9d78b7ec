use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Coxeter type {label}{rank}: {reason}")]
    InvalidType { label: String, rank: usize, reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("operation requires {0}")]
    Unsupported(String),

    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: u128, bound: u128 },

    #[error("roots are not contained in the span of the ambient set")]
    NotInSpan,

    #[error("roots are in the rational span but not in the lattice of the ambient set")]
    NotSublattice,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("factorization is not reduced: length {len}, reflection length {expected}")]
    NotReduced { len: usize, expected: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
