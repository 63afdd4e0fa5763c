//! Crate-wide error type with a stable exit-code mapping for the CLI.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// The CLI maps these onto process exit codes: domain/format/validation
/// errors exit 1, resource errors exit 2, internal-consistency errors exit 3.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside an operation's contract.
    #[error("domain error: {0}")]
    Domain(String),

    /// A file or stream did not parse.
    #[error("format error: {0}")]
    Format(String),

    /// Parsed data violates a structural invariant (e.g. non-increasing zero ordinates).
    #[error("validation error: {0}")]
    Validation(String),

    /// The request exceeds a configured size or arithmetic budget.
    #[error("resource error: {0}")]
    Resource(String),

    /// An internal cross-check failed; results cannot be trusted.
    #[error("internal-consistency error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code documented for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Format(_) | Error::Validation(_) => 1,
            Error::Resource(_) | Error::Io(_) => 2,
            Error::Internal(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
