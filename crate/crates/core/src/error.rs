use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TpError {
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    /// An arithmetic invariant was violated; always an implementation bug.
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, TpError>;

impl From<std::io::Error> for TpError {
    fn from(e: std::io::Error) -> Self {
        TpError::Io(e.to_string())
    }
}
