use thiserror::Error;

/// Errors raised by the algebra layer and the session front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported representation: {0}")]
    Unsupported(String),
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("computation cancelled")]
    Cancelled,
    #[error("command {index} ({command}): {source}")]
    Command { index: usize, command: String, source: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;
