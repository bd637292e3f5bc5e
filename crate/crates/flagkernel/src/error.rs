//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the toolkit.
///
/// The variants distinguish caller mistakes from numerical trouble and from
/// internal inconsistencies (the latter indicate a bug in this crate, never
/// bad input).
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The caller supplied an argument outside the documented contract.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An evaluation point lies outside the mathematical domain of the
    /// operation (e.g. rho <= 0 for a kernel evaluation).
    #[error("domain error: {0}")]
    Domain(String),

    /// A floating computation failed to converge or lost too much accuracy.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A least-squares fit could not be carried out reliably.
    #[error("fit error: {message} (condition estimate {condition:.3e})")]
    Fit { message: String, condition: f64 },

    /// An internal invariant was violated; indicates a bug, not a user error.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code used by the command-line front end:
    /// 2 for bad input, 3 for internal inconsistencies, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Domain(_) => 2,
            Error::Internal(_) => 3,
            Error::Numeric(_) | Error::Fit { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
