use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("pattern {0} does not start with 1")]
    PatternNotStartingWithOne(String),

    #[error("unsupported pattern family: {0}")]
    UnsupportedFamily(String),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("no {method} method is available for {family}")]
    MethodUnavailable { method: String, family: String },

    #[error("value outside the required class: {0}")]
    NotInClass(String),

    #[error("arithmetic invariant violated: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
