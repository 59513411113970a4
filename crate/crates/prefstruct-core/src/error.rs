use thiserror::Error;

/// Construction and restriction failures for profiles and orderings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("a profile needs at least one voter and one alternative")]
    Empty,
    #[error("vote {voter} is not a permutation of 0..{m}")]
    NotPermutation { voter: usize, m: usize },
    #[error("expected {expected} alternative names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("selection must keep at least one element")]
    EmptySelection,
    #[error("id {id} is out of range for size {len}")]
    OutOfRange { id: usize, len: usize },
    #[error("id {id} appears twice in the selection")]
    Duplicate { id: usize },
    #[error("rankings have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("ordering is not a permutation of 0..{len}")]
    BadOrdering { len: usize },
}
