//! Error type shared by the limit evaluators and regime constants.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScalingError {
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
    Hyperfun(#[from] hyperfun::HyperfunError),
}
