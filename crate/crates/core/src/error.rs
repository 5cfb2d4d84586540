use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A type/rank pair outside the classification.
    #[error("invalid simple type {family}{rank}: {constraint}")]
    InvalidTypeRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },
    #[error("validation error: {0}")]
    Validation(String),
    /// Malformed group-datum or request document.
    #[error("{field}: {message}")]
    Schema { field: String, message: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Input lies in a case the underlying results exclude.
    #[error("excluded case: {0}")]
    ExcludedCase(String),
    #[error("twist {0} is not an element of the fundamental group of the derived subgroup")]
    TwistNotInKernel(String),
    /// An internal consistency check failed. Never expected on valid input.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }

    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }
}
