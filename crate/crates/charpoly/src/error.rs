//! Error type shared by the characteristic-polynomial evaluators.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CharPolyError {
    /// Invalid or inconsistent input parameters.
    #[error("domain error: {0}")]
    Domain(String),
    /// Parameter combination outside the implemented evaluation routes.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A numerical routine failed to converge to the requested accuracy.
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error(transparent)]
    Ensembles(#[from] ensembles::EnsemblesError),
    #[error(transparent)]
    Hyperfun(#[from] hyperfun::HyperfunError),
}
