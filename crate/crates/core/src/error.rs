use thiserror::Error;

/// Errors raised by constructors, transforms and solvers.
///
/// Verification failures are never errors: they are reported through
/// [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("module mismatch: {0}")]
    ModuleMismatch(String),
    #[error("negative exponent in a non-Laurent ring: {0}")]
    NegativeExponent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("operation requires the field case (a ring without variables): {0}")]
    NotFieldCase(String),
    #[error("degree {0} is outside the complex")]
    Degree(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
