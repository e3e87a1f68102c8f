use thiserror::Error;

/// Errors raised by the design library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("point {index} is the zero vector")]
    ZeroPoint { index: usize },

    #[error("invalid point {index}: {reason}")]
    InvalidPoint { index: usize, reason: String },

    #[error("points {first} and {second} are projectively equal")]
    DuplicatePoint { first: usize, second: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
