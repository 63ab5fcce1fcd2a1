use thiserror::Error;

/// Errors raised by graph construction, the solvers and the analyses built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad edge list, out-of-range vertex, self-loop, missing edge.
    #[error("input error: {0}")]
    Input(String),
    /// The operation's precondition does not hold for this graph (e.g. not König-Egerváry).
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The input exceeds a configured solver limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A postcondition asserted by the library did not hold.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
