use thiserror::Error;

/// Errors raised by the library.
///
/// `Input` and `Domain` are caller mistakes. `Invariant` means an exact
/// computation produced something the mathematics rules out, and
/// should never be observed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid orientation character {found:?} at position {position}")]
    InvalidOrientation { found: char, position: usize },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("vertex range [{lo}..{hi}] is not inside 1..={n}")]
    VertexOutOfRange { lo: usize, hi: usize, n: usize },

    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("entry {index} of r is not strictly positive")]
    NonPositiveR { index: usize },

    #[error("slope of the zero dimension vector is undefined")]
    ZeroDimension,

    #[error("interval of length {len} exceeds the enumeration bound of {bound}")]
    EnumerationBound { len: usize, bound: usize },

    #[error("vertex count {n} outside supported range 1..={max}")]
    VertexCount { n: usize, max: usize },

    #[error("record index {k} outside 1..={count}")]
    RecordIndex { k: usize, count: usize },

    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
