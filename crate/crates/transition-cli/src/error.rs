//! Error type covering configuration, domain, and downstream failures.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransitionError {
    /// Parameters outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed or inconsistent configuration input.
    #[error("config error: {0}")]
    Config(String),
    /// Numerical failure: stalled series, overflow, lost precision.
    #[error("numerical error: {0}")]
    Numerical(String),
    /// Filesystem failure, annotated with the path involved.
    #[error("io error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    CharPoly(#[from] charpoly::CharPolyError),
    #[error(transparent)]
    Scaling(#[from] scalinglimits::ScalingError),
    #[error(transparent)]
    Hyperfun(#[from] hyperfun::HyperfunError),
    #[error(transparent)]
    Ensembles(#[from] ensembles::EnsemblesError),
}
