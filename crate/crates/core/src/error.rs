use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Diagram family/rank combination that does not exist.
    #[error("invalid diagram {0}")]
    InvalidSpec(String),
    /// Malformed or inconsistent user input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Request exceeds the configured computation bounds.
    #[error("out of bounds: {0}")]
    OutOfBounds(String),
    /// A structural theorem failed to hold on computed data. This always
    /// points at a bug in the implementation.
    #[error("theorem violation: {0}")]
    Violation(String),
}

impl Error {
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Violation(_))
    }
}
