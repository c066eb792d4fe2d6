use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violated an operation's precondition; the message names it.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computed value failed an integrality or divisibility check that
    /// the underlying formula guarantees.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
