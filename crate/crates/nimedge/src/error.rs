//! Error type shared across the crate.

/// Errors reported by constructions, parsers and searches.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid argument (bad family parameters, mismatched orders, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A size or node budget was exceeded before the computation could finish.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A randomised construction could not be completed.
    #[error("construction failed: {0}")]
    Construction(String),

    /// Malformed input file.
    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },

    /// A result failed its own re-verification, or an asserted bound broke.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }
}
