use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain (e.g. `n < 1`).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown catalog entry: {0}")]
    Catalog(String),

    /// A catalog entry was requested without a parameter it needs.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed. Never expected to fire.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
