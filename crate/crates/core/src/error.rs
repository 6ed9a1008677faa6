use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad generator parameters (e.g. `k >= n/2` for a Kneser graph).
    #[error("invalid parameters: {0}")]
    Parameter(String),
    /// Malformed graph6 or edge-list input.
    #[error("format error: {0}")]
    Format(String),
    /// An argument does not satisfy the operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The input graph is outside the class the operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),
    /// The instance exceeds a hard size cap.
    #[error("size limit exceeded: {0}")]
    Size(String),
    /// A search ran past its check budget before finishing.
    #[error("search budget of {limit} checks exhausted")]
    Budget { limit: u64 },
    /// An internal invariant failed; always a bug or a counterexample worth reporting.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag, used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parameter(_) => "parameter",
            Error::Format(_) => "format",
            Error::Argument(_) => "argument",
            Error::Domain(_) => "domain",
            Error::Size(_) => "size",
            Error::Budget { .. } => "budget",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
