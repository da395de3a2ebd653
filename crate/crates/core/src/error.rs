use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An arithmetic function was evaluated past its declared bound.
    #[error("evaluation at {n} exceeds the bound {bound}")]
    BoundExceeded { n: u64, bound: u64 },
    /// The query is outside what the formulas cover.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Two evaluation routes that must agree did not.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
