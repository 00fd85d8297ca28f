use thiserror::Error;

/// Failures surfaced by the library.
///
/// `Usage` covers bad inputs (non-prime moduli, trivial labels); `Invariant`
/// means a structural check that must always hold did not, which points at a
/// bug rather than at the caller.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! ensure_invariant {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($arg)+)));
        }
    };
}

pub(crate) use ensure_invariant;
