use thiserror::Error;

/// Errors raised by the cluster model, the builders, the blending engine and
/// the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input violates a documented precondition.
    #[error("validation error: {0}")]
    Validation(String),

    /// A guarded size limit would be exceeded.
    #[error("{what} has {actual} vertices, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        actual: String,
        cap: usize,
    },

    /// A blending step was requested on a cluster with a single class.
    #[error("terminal state: {0}")]
    Terminal(String),

    /// Text input could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
