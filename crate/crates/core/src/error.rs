use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input (bad dimensions, indices, file syntax).
    #[error("invalid input: {0}")]
    Input(String),
    /// Input is well formed but violates an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A randomized or capped procedure ran out of budget. Never a refutation.
    #[error("budget exhausted: {0}")]
    Exhausted(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Stable machine-readable code used in CLI reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Input(_) => "invalid_input",
            Error::Precondition(_) => "precondition",
            Error::Exhausted(_) => "budget_exhausted",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
