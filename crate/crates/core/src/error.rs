use thiserror::Error;

/// Errors raised by series arithmetic and the array constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a unit: series has order {order} (constant term must be nonzero)")]
    NotAUnit { order: String },

    #[error("composition undefined: inner series has nonzero constant term")]
    CompositionUndefined,

    #[error("no compositional inverse: series has order {order}, expected exactly 1")]
    NoCompositionalInverse { order: String },

    #[error(
        "insufficient precision: index {requested} requested, series trusted up to {available}"
    )]
    InsufficientPrecision { requested: usize, available: usize },

    #[error("index out of range: ({n}, {k})")]
    IndexOutOfRange { n: i64, k: i64 },

    #[error("invalid Riordan pair: {0}")]
    InvalidPair(String),

    #[error("not a proper A-sequence: a_0 must be nonzero")]
    NotProperASequence,

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular: {0}")]
    Singular(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
