//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors distinguish *caller* problems (bad arguments, inputs that violate a
/// documented precondition, descriptors that are mathematically inconsistent)
/// from *internal* problems (a cross-check between two independent
/// computations failed) and resource limits. The command-line layer maps
/// internal errors to a distinct exit code so an inconsistency in the theory
/// tables is never silently reported as a bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range argument.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A construction required lattice (integer) breakpoints and the input
    /// does not have them.
    #[error("integrality violation: {0}")]
    IntegralityViolation(String),

    /// A documented precondition of an algorithm does not hold for the input.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The input data is arithmetically inconsistent (for example a solved
    /// invariant comes out negative or fractional).
    #[error("inconsistency: {0}")]
    Inconsistency(String),

    /// The input is valid but outside the domain this implementation handles.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A computation exceeded its resource budget before stabilizing.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A variety descriptor cannot be classified; the message names the
    /// violated constraint.
    #[error("classification error: {0}")]
    Classification(String),

    /// Two independent internal computations disagreed. This is a bug or a
    /// broken invariant, never a caller error.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// Underlying I/O failure (only produced by the command-line layer).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
