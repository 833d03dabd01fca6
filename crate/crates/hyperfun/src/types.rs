//! Parameter and result types for the Jack-series hypergeometric functions.

use crate::error::HyperfunError;
use num_complex::Complex64;

/// Parameters of a `pFq`-type hypergeometric function of `nvars`-dimensional
/// argument(s) with deformation parameter `alpha`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricSpec {
    /// Number of upper (numerator) parameters; equals `upper.len()`.
    pub p: usize,
    /// Number of lower (denominator) parameters; equals `lower.len()`.
    pub q: usize,
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub alpha: f64,
    pub nvars: usize,
}

impl HypergeometricSpec {
    /// Validate parameters.
    ///
    /// # Edge cases
    /// A lower parameter `b` with `(i-1)/alpha - b` a non-negative integer
    /// for some `1 <= i <= nvars` makes a denominator Pochhammer vanish
    /// after finitely many terms; such specs are rejected.
    pub fn new(
        upper: Vec<f64>,
        lower: Vec<f64>,
        alpha: f64,
        nvars: usize,
    ) -> Result<Self, HyperfunError> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(HyperfunError::Domain(format!(
                "alpha must be finite and positive, got {alpha}"
            )));
        }
        if nvars == 0 {
            return Err(HyperfunError::Domain("nvars must be at least 1".into()));
        }
        for &b in &lower {
            for i in 1..=nvars {
                let t = (i as f64 - 1.0) / alpha - b;
                if t > -1e-9 && (t - t.round()).abs() < 1e-9 {
                    return Err(HyperfunError::Domain(format!(
                        "lower parameter {b} is inadmissible: (i-1)/alpha - b = {t} \
                         is a non-negative integer for i = {i}"
                    )));
                }
            }
        }
        Ok(HypergeometricSpec { p: upper.len(), q: lower.len(), upper, lower, alpha, nvars })
    }
}

/// Truncation control for the partition-shell series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationPolicy {
    /// Highest partition weight (total degree) to sum; at least 1.
    pub max_degree: usize,
    /// Relative tail tolerance: the series stops once two consecutive
    /// degree shells fall below this fraction of the running total.
    pub tail_tol: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { max_degree: 40, tail_tol: 1e-10 }
    }
}

impl TruncationPolicy {
    pub fn validate(&self) -> Result<(), HyperfunError> {
        if self.max_degree < 1 {
            return Err(HyperfunError::Domain("max_degree must be at least 1".into()));
        }
        if !(self.tail_tol >= 0.0) {
            return Err(HyperfunError::Domain("tail_tol must be non-negative".into()));
        }
        Ok(())
    }
}

/// A truncated series evaluation.
///
/// `converged` is advisory: it reports whether the tail criterion was met
/// before `max_degree`, and is never turned into an error.
#[derive(Clone, Copy, Debug)]
pub struct SeriesValue {
    pub value: Complex64,
    /// Magnitude of the last degree shell added.
    pub last_shell: f64,
    /// Highest degree actually summed.
    pub degrees_used: usize,
    pub converged: bool,
}
