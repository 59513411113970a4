use prefstruct_core::ProfileError;
use thiserror::Error;

/// Failures reported by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} is {got}, above the limit of {limit}")]
    TooLarge { what: &'static str, got: usize, limit: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("input does not fit: {0}")]
    Invalid(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn limit(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::TooLarge { what, got, limit })
    } else {
        Ok(())
    }
}
