use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate swap at position {position}")]
    DegenerateSwap { position: usize },
    #[error("singular factor: {0}")]
    SingularFactor(String),
    #[error("reproduction not applicable in direction {direction}: {reason}")]
    NotApplicable { direction: usize, reason: String },
    #[error("no polynomial solution in direction {direction}")]
    NoSolution { direction: usize },
    #[error("non-generic node: {0}")]
    NonGeneric(String),
    #[error("symbolic parameter budget exceeded: {0}")]
    ParamBudget(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("factor of degree {degree} does not split over the field")]
    NeedsExtension { degree: usize },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True for errors caused by malformed input rather than failed mathematics.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidField(_) | Error::Invalid(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
