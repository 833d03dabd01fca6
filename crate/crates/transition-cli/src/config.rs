//! Experiment configuration: one flat JSON document per scan, with every
//! field overridable from the command line.

use crate::error::TransitionError;
use crate::report::{classify_regime, Family};
use scalinglimits::Regime;
use serde::{Deserialize, Serialize};

/// Output encoding for emitted rows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

fn default_max_degree() -> usize {
    80
}
fn default_tail_tol() -> f64 {
    1e-12
}
fn default_samples() -> usize {
    20_000
}
fn default_workers() -> usize {
    1
}

/// Every knob of a convergence scan.
///
/// `t` is optional: leave it out to run at the transition point, where the
/// scan recomputes the time per matrix size from `tau` (the double scaling).
/// `f_tail` lists the designated source entries that stay fixed: all `r` of
/// them off criticality with `m = 0`, the last `r - m` in the critical and
/// supercritical regimes.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub family: Family,
    pub beta: f64,
    /// Number of polynomial arguments (the window dimension).
    pub n: usize,
    #[serde(default)]
    pub r: usize,
    #[serde(default)]
    pub m: usize,
    pub b: f64,
    #[serde(default)]
    pub a: Option<f64>,
    #[serde(default)]
    pub t: Option<f64>,
    #[serde(default)]
    pub tau: f64,
    /// Window coordinate vectors; one scan row per (N, y) pair.
    pub y_grid: Vec<Vec<f64>>,
    #[serde(default)]
    pub sigma: Vec<f64>,
    #[serde(default)]
    pub f_tail: Vec<f64>,
    pub n_list: Vec<usize>,
    #[serde(default = "default_max_degree")]
    pub max_degree: usize,
    #[serde(default = "default_tail_tol")]
    pub tail_tol: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default = "default_workers")]
    pub workers: usize,
    #[serde(default)]
    pub out: Option<String>,
    #[serde(default)]
    pub format: OutputFormat,
}

/// Largest admissible window coordinate; the limit theorems hold uniformly
/// on compacts, so the scan refuses arguments outside a fixed box.
pub const Y_BOUND: f64 = 10.0;

impl ExperimentConfig {
    /// Parses a flat JSON config document.
    pub fn from_json(text: &str) -> Result<Self, TransitionError> {
        serde_json::from_str(text).map_err(|e| TransitionError::Config(e.to_string()))
    }

    /// Reads and parses a config file.
    pub fn from_path(path: &str) -> Result<Self, TransitionError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| TransitionError::Io { path: path.to_string(), source: e })?;
        Self::from_json(&text)
    }

    /// Full validation; returns the regime the scan will run in.
    pub fn validate(&self) -> Result<Regime, TransitionError> {
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(TransitionError::Config(format!(
                "beta must be positive, got {}",
                self.beta
            )));
        }
        if self.n == 0 {
            return Err(TransitionError::Config("need at least one polynomial argument".into()));
        }
        if !(self.b.is_finite() && self.b > 0.0) {
            return Err(TransitionError::Config(format!(
                "the transition parameter b must be positive, got {}",
                self.b
            )));
        }
        match self.family {
            Family::Laguerre => {
                let a = self.a.ok_or_else(|| {
                    TransitionError::Config("the half-line family needs the wall exponent a".into())
                })?;
                if !(a.is_finite() && a > 0.0) {
                    return Err(TransitionError::Config(format!(
                        "wall exponent a must be positive, got {a}"
                    )));
                }
            }
            Family::Gaussian => {
                if self.a.is_some() {
                    return Err(TransitionError::Config(
                        "a is a half-line parameter; remove it for the real-line family".into(),
                    ));
                }
            }
        }
        if !self.tau.is_finite() {
            return Err(TransitionError::Config(format!("tau must be finite, got {}", self.tau)));
        }
        if self.m > self.r {
            return Err(TransitionError::Config(format!(
                "{} window-scaled entries exceed the source rank {}",
                self.m, self.r
            )));
        }
        if self.sigma.len() != self.m {
            return Err(TransitionError::Config(format!(
                "sigma has {} entries, expected m = {}",
                self.sigma.len(),
                self.m
            )));
        }
        if self.family == Family::Laguerre && self.sigma.iter().any(|&s| s < 0.0 || !s.is_finite())
        {
            return Err(TransitionError::Config(
                "half-line window coordinates sigma must be nonnegative".into(),
            ));
        }

        let regime = self.regime()?;
        let fixed_want = match regime {
            Regime::Subcritical => {
                if self.m != 0 {
                    return Err(TransitionError::Config(
                        "off-critical scans keep every designated entry fixed; set m = 0".into(),
                    ));
                }
                self.r
            }
            _ => self.r - self.m,
        };
        if self.f_tail.len() != fixed_want {
            return Err(TransitionError::Config(format!(
                "f_tail has {} entries, expected {fixed_want} for this regime",
                self.f_tail.len()
            )));
        }
        if regime == Regime::Subcritical
            && self.family == Family::Gaussian
            && self.n % 2 != 0
        {
            return Err(TransitionError::Config(
                "the subcritical real-line limit exists for even n only".into(),
            ));
        }

        if self.y_grid.is_empty() {
            return Err(TransitionError::Config("y_grid must contain at least one point".into()));
        }
        for y in &self.y_grid {
            if y.len() != self.n {
                return Err(TransitionError::Config(format!(
                    "y point {:?} has {} coordinates, expected n = {}",
                    y,
                    y.len(),
                    self.n
                )));
            }
            if y.iter().any(|v| !v.is_finite() || v.abs() > Y_BOUND) {
                return Err(TransitionError::Config(format!(
                    "window coordinates must lie in [-{Y_BOUND}, {Y_BOUND}], got {y:?}"
                )));
            }
        }
        if self.n_list.is_empty() {
            return Err(TransitionError::Config("n_list must contain at least one size".into()));
        }
        for &n_dim in &self.n_list {
            if n_dim == 0 {
                return Err(TransitionError::Config("matrix sizes must be at least 1".into()));
            }
            if self.r > n_dim {
                return Err(TransitionError::Config(format!(
                    "{} designated source entries exceed the matrix size {n_dim}",
                    self.r
                )));
            }
            if self.family == Family::Gaussian && (n_dim + self.r) % 2 != 0 {
                return Err(TransitionError::Config(format!(
                    "the bulk splits into equal halves only when N + r is even; N = {n_dim}, r = {}",
                    self.r
                )));
            }
        }
        if self.n > 3 {
            if self.samples < 2 {
                return Err(TransitionError::Config(
                    "sampling route (n > 3) needs a sample budget of at least 2".into(),
                ));
            }
            if self.seed.is_none() {
                return Err(TransitionError::Config(
                    "sampling route (n > 3) needs an explicit seed".into(),
                ));
            }
        }
        if self.workers == 0 {
            return Err(TransitionError::Config("workers must be at least 1".into()));
        }
        Ok(regime)
    }

    /// The regime this config runs in: explicitly critical when `t` is
    /// absent, otherwise classified from `(t, b)`.
    pub fn regime(&self) -> Result<Regime, TransitionError> {
        match self.t {
            None => Ok(Regime::Critical),
            Some(t) => Ok(classify_regime(self.family, t, self.b)?.regime),
        }
    }
}
