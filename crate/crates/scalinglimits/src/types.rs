//! Request and result types for the limit-function evaluators.

use crate::error::ScalingError;
use hyperfun::TruncationPolicy;
use num_complex::Complex64;
use numeric::QuadOptions;

/// Which of the four limit families to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    /// Quartic-weight window on the real line (collision regime).
    PearceyP,
    /// Gaussian-weight window on the real line (separated regime).
    GaussG,
    /// Hard-edge window on the half line with the extra quadratic cutoff.
    CritB,
    /// Hard-edge window on the half line with the pure wall weight.
    HardW,
}

/// How a `LimitValue` was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitMethod {
    Quadrature,
    MonteCarlo,
}

/// A fully specified limit-function evaluation request.
///
/// `y` carries one entry per integration dimension (`n`), `sigma` one entry
/// per linear factor (`m`). The half-line families additionally need the
/// wall exponent `a`; `tau` only enters the two window families that carry
/// a quadratic deformation.
#[derive(Clone, Debug)]
pub struct LimitSpec {
    pub kind: LimitKind,
    pub alpha: f64,
    pub n: usize,
    pub m: usize,
    pub a: Option<f64>,
    pub tau: f64,
    pub y: Vec<f64>,
    pub sigma: Vec<f64>,
}

impl LimitSpec {
    /// Checks internal consistency; every evaluator calls this first.
    ///
    /// # Edge cases
    /// - Half-line kinds require `a > 0` and non-negative `sigma`.
    /// - `y` must have length `n`, `sigma` length `m`.
    pub fn validate(&self) -> Result<(), ScalingError> {
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return Err(ScalingError::Domain(format!(
                "alpha must be positive, got {}",
                self.alpha
            )));
        }
        if !self.tau.is_finite() {
            return Err(ScalingError::Domain("tau must be finite".into()));
        }
        if self.y.len() != self.n {
            return Err(ScalingError::Domain(format!(
                "y has {} entries but n = {}",
                self.y.len(),
                self.n
            )));
        }
        if self.sigma.len() != self.m {
            return Err(ScalingError::Domain(format!(
                "sigma has {} entries but m = {}",
                self.sigma.len(),
                self.m
            )));
        }
        if matches!(self.kind, LimitKind::CritB | LimitKind::HardW) {
            match self.a {
                Some(a) if a.is_finite() && a > 0.0 => {}
                Some(a) => {
                    return Err(ScalingError::Domain(format!(
                        "wall exponent a must be positive, got {a}"
                    )))
                }
                None => {
                    return Err(ScalingError::Domain(
                        "half-line kinds need the wall exponent a".into(),
                    ))
                }
            }
            if self.sigma.iter().any(|&s| s < 0.0) {
                return Err(ScalingError::Domain(
                    "half-line sigma entries must be non-negative".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Value of a limit function with an error estimate.
///
/// For quadrature `est_error` is the accumulated interval error bound, for
/// Monte Carlo the standard error of the mean.
#[derive(Clone, Copy, Debug)]
pub struct LimitValue {
    pub value: Complex64,
    pub est_error: f64,
    pub method: LimitMethod,
}

/// Accuracy and work controls shared by all evaluators.
#[derive(Clone, Copy, Debug)]
pub struct EvalPolicy {
    pub quad: QuadOptions,
    pub series: TruncationPolicy,
    /// Sample count for the n >= 4 Monte Carlo route.
    pub mc_samples: usize,
    /// Base seed for the per-path deterministic streams.
    pub mc_seed: u64,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        EvalPolicy {
            quad: QuadOptions { tol_abs: 1e-11, tol_rel: 1e-9, max_intervals: 600 },
            series: TruncationPolicy { max_degree: 80, tail_tol: 1e-12 },
            mc_samples: 20_000,
            mc_seed: 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_spec(kind: LimitKind) -> LimitSpec {
        LimitSpec {
            kind,
            alpha: 1.0,
            n: 1,
            m: 0,
            a: Some(1.0),
            tau: 0.0,
            y: vec![0.0],
            sigma: vec![],
        }
    }

    #[test]
    fn validates_lengths_and_signs() {
        let mut spec = base_spec(LimitKind::GaussG);
        assert!(spec.validate().is_ok());
        spec.y = vec![0.0, 1.0];
        assert!(spec.validate().is_err());

        let mut spec = base_spec(LimitKind::HardW);
        spec.m = 1;
        spec.sigma = vec![-0.5];
        assert!(spec.validate().is_err());
        spec.sigma = vec![0.5];
        assert!(spec.validate().is_ok());
    }

    #[test]
    fn half_line_kinds_need_the_wall_exponent() {
        let mut spec = base_spec(LimitKind::CritB);
        spec.a = None;
        assert!(spec.validate().is_err());
        spec.a = Some(-1.0);
        assert!(spec.validate().is_err());
    }
}
