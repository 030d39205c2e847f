use thiserror::Error;

/// Errors surfaced by the public API.
///
/// `Structural` covers malformed values (bad indices, mismatched
/// indeterminate sets, non-rectangular input); `Contract` covers calls
/// outside an operation's stated preconditions (m > n, out-of-range
/// expansion parameters); `Limit` covers refusals of work that would be
/// astronomically large without an explicit override.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("size limit: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn limit(msg: impl Into<String>) -> Self {
        Error::Limit(msg.into())
    }
}
