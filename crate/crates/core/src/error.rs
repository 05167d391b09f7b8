use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("bound exceeded: {what} is {value}, limit is {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("no integral: {0}")]
    NoIntegral(String),
    #[error("inconsistent characters: {0}")]
    InconsistentCharacters(String),
    #[error("not factorizable: {0}")]
    NotFactorizable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("non-integer multiplicity: {0}")]
    NonIntegerMultiplicity(String),
    #[error("not closed under fusion: {0}")]
    NotClosed(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("method precondition violated: {0}")]
    MethodPreconditionViolated(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
