use thiserror::Error;

/// Errors raised by the algebra, linear algebra and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: {0}")]
    Division(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous: {0}")]
    Homogeneity(String),

    #[error("minor budget exceeded: {count} submatrices requested, cap is {cap}")]
    BudgetExceeded { count: u128, cap: u64 },

    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
