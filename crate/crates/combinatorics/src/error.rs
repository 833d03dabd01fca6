//! Error type for partition and Jack polynomial routines.

use thiserror::Error;

/// Returned when an argument lies outside the mathematical domain of an
/// operation (mismatched weights, too many parts, non-positive parameters).
#[derive(Debug, Error)]
pub enum CombinatoricsError {
    #[error("domain error: {0}")]
    Domain(String),
}
