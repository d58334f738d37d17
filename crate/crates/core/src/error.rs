use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GdqError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("{0} is undefined in characteristic 2")]
    CharTwo(&'static str),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, GdqError>;

impl GdqError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        GdqError::Invalid(msg.into())
    }

    pub fn is_inconsistency(&self) -> bool {
        matches!(self, GdqError::Inconsistency(_))
    }
}
