//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the exact and numerical engines.
#[derive(Debug, Error)]
pub enum Error {
    /// Vector/matrix sizes do not match the declared ranks.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Decomposition input is not the character of a genuine representation.
    #[error("not a character: {0}")]
    NotACharacter(String),

    /// An operation that requires a nonzero character received zero.
    #[error("empty character")]
    EmptyCharacter,

    /// A denominator factor has t-degree zero, so the geometric expansion
    /// direction is not determined.
    #[error("ambiguous expansion direction: {0}")]
    AmbiguousExpansion(String),

    /// Exact polynomial division left a nonzero remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// A quadrature or refinement loop exhausted its budget. Carries the
    /// partial value and the last error estimate.
    #[error("did not converge: partial value {partial}, error estimate {estimate}")]
    Convergence { partial: f64, estimate: f64 },

    /// Malformed textual/JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
