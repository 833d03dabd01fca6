//! Command-line driver for the spectral phase-transition experiments:
//!
//! - regime classification with saddle data and window maps,
//! - source-vector construction under each regime's scaling,
//! - convergence scans of the normalized averaged product against its
//!   window-limit value over a list of matrix sizes,
//! - CSV/JSON emission with fully reproducible numbers.
//!
//! The binary in `main.rs` wraps these pieces; everything here is a plain
//! library so tests can drive scans without spawning processes.

pub mod config;
pub mod emit;
pub mod error;
pub mod report;
pub mod scan;
pub mod source;

pub use config::{ExperimentConfig, OutputFormat, Y_BOUND};
pub use emit::{emit, render, sig17};
pub use error::TransitionError;
pub use report::{
    classify_regime, gaussian_saddle_residual, regime_name, scaling_for, Family, RegimeReport,
    ScalingMap, CRITICAL_BAND,
};
pub use scan::{run_convergence_scan, ConvergenceRow, ScanResult};
pub use source::{build_source, designated_entries};
