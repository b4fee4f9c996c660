use alloc::string::String;

/// Errors surfaced by the algebraic engine.
///
/// Construction bugs (a basis that is not invariant, a generating-set solve
/// that disagrees with the full verification pass) are reported rather than
/// papered over; callers treat them as hard failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension {n} exceeds the supported bound {max}")]
    TooLarge { n: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),

    #[error("value is not real: {0}")]
    NotReal(String),

    #[error("element is not in the span")]
    NotInSpan,

    #[error("multiplicity quotient {hom}/{end} is not an integer")]
    InexactMultiplicity { hom: usize, end: usize },

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = core::result::Result<T, Error>;
