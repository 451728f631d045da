use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input data violates a structural invariant (duplicates, improper colouring, ...).
    #[error("validation error: {0}")]
    Validation(String),
    /// A guard on search-space or input size was exceeded, or a construction came up short.
    #[error("size error: {0}")]
    Size(String),
    /// A curve point or parameter hits a degenerate case of a map.
    #[error("degenerate: {0}")]
    Degenerate(String),
    /// A documented precondition of a theorem-driven construction does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A randomized search exhausted its attempt budget.
    #[error("stochastic failure after {attempts} attempts: {detail}")]
    Stochastic { attempts: usize, detail: String },
    /// A post-hoc verification failed; indicates a bug rather than bad input.
    #[error("internal verification failure: {0}")]
    Internal(String),
    /// Malformed text or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// True for errors produced by exhausted randomized searches.
    pub fn is_stochastic(&self) -> bool {
        matches!(self, Error::Stochastic { .. })
    }
}
