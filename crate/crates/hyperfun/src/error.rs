//! Error type for hypergeometric series evaluation.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HyperfunError {
    /// Argument outside the mathematical domain (wrong vector length,
    /// inadmissible lower parameter, odd variable count, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error(transparent)]
    Combinatorics(#[from] combinatorics::CombinatoricsError),
}
