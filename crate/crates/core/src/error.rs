use thiserror::Error;

/// Errors produced by input validation, resource guards and the
/// cross-check harness.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed pair-list syntax.
    #[error("syntax error in pair list: {0}")]
    Syntax(String),

    /// A pair violates a validity condition; `index` is 1-based.
    #[error("invalid pair #{index}: {reason}")]
    InvalidPair { index: usize, reason: String },

    /// Empty pair list (a smooth branch has no singularity).
    #[error("empty pair list: at least one Puiseux pair is required")]
    EmptyPairs,

    /// Generic invalid argument outside the pair list itself.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Resource guard tripped (vertex count or w_g limit).
    #[error("resource guard: {0}")]
    GuardLimit(String),

    /// A cross-check between independent routes failed.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code contract: 1 input error, 2 verification
    /// mismatch, 3 resource guard.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VerificationFailed(_) => 2,
            Error::GuardLimit(_) => 3,
            _ => 1,
        }
    }
}
