use thiserror::Error;

/// Errors raised by the library.
///
/// Hypothesis failures of the theorems themselves are not errors; they are
/// reported in a [`crate::bounds::TheoremPlan`]. The variants here cover broken
/// call contracts and inputs that a computation cannot proceed on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unsupported ambient dimension {0} (at most {max} supported)", max = crate::polytope::MAX_DIM)]
    UnsupportedDimension(usize),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("hypothesis cannot be verified: {0}")]
    Unverifiable(String),

    #[error("integer overflow in exact polytope arithmetic")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
