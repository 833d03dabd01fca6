//! Error type for ensemble construction, densities, and samplers.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnsemblesError {
    /// Parameter or evaluation point outside the mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical procedure exhausted its budget (e.g. step halvings).
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Hyperfun(#[from] hyperfun::HyperfunError),
}
