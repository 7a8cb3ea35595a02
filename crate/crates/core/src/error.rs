use std::fmt;

/// A failed exhaustive or sampled check, with the tuple that broke it.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Failure {
    pub check: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Failure {
    pub fn new(check: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Failure { check: check.into(), witness, detail: detail.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed at {:?}", self.check, self.witness)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

impl std::error::Error for Failure {}

/// Result of a verifier: `Ok(())` or the first failing witness.
pub type Check = std::result::Result<(), Failure>;

#[derive(thiserror::Error, Debug, Clone)]
pub enum Error {
    #[error("invalid group: {0}")]
    Group(Failure),
    #[error("invalid cocycle: {0}")]
    Cocycle(Failure),
    #[error("precondition violated: {0}")]
    Precondition(Failure),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("group of order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    /// The failure witness, if this error carries one.
    pub fn failure(&self) -> Option<&Failure> {
        match self {
            Error::Group(f) | Error::Cocycle(f) | Error::Precondition(f) => Some(f),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
