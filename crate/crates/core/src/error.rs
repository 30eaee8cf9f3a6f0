use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// reproduce the failing call.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root datum type {lie_type}{rank}")]
    InvalidType { lie_type: char, rank: usize },
    #[error("unknown Lie type {0:?}")]
    UnknownType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("simple index {index} out of range for rank {rank} (indices are 1-based)")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("Weyl group of order {order} exceeds the configured cap {cap}")]
    GroupTooLarge { order: u128, cap: usize },
    #[error("word {word:?} is not reduced (its product has length {length})")]
    NotReduced { word: Vec<usize>, length: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("{0} is not a minimal coset representative for the maximal parabolic")]
    NotMinimalRepresentative(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
