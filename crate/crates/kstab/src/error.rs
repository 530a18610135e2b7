//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction and evaluation routines.
///
/// Variants split into two groups mirroring how the CLI reports them:
/// malformed input (bad diagram strings, bad config files, bad numbers)
/// versus mathematical precondition failures (non-dominant weights,
/// pencils leaving the dominant cone, degenerate volumes).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Dynkin diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid number: {0}")]
    InvalidNumber(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("weight not supported on the marking: {0}")]
    UnsupportedWeight(String),

    #[error("weight not dominant: {0}")]
    NonDominantWeight(String),

    #[error("pencil leaves the dominant cone on the integration window: {0}")]
    DominanceFailure(String),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by a
    /// mathematical precondition failing on well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidDiagram(_)
                | Error::InvalidConfig(_)
                | Error::InvalidNumber(_)
                | Error::DimensionMismatch(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
