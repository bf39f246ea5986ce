use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A real-valued input fell outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("key {0} is outside the key space [3.57, 4.0]")]
    KeyOutOfRange(f64),

    /// Malformed or inconsistent arguments (lengths, indices, intervals).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
