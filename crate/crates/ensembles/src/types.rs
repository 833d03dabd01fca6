//! Ensemble parameter types, SDE configuration, and sample records.

use crate::error::EnsemblesError;

/// Matrix-model family behind the eigenvalue measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Additively perturbed Hermitian Gaussian matrices.
    GaussianSource,
    /// Wishart-type matrices with a fixed-trace source.
    LaguerreSource,
}

/// Parameters of a sourced beta-ensemble at a fixed time horizon.
///
/// For the Laguerre family `a` must be set; when the integer dimension
/// `p_dim` is also given it must satisfy `a = beta (p_dim - n + 1) / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleSpec {
    pub family: Family,
    pub beta: f64,
    /// Matrix dimension (number of eigenvalues).
    pub n: usize,
    /// Time horizon / variance scale; strictly positive.
    pub t: f64,
    /// Source eigenvalues, length `n`; non-negative for Laguerre.
    pub f: Vec<f64>,
    /// Laguerre exponent; `None` for the Gaussian family.
    pub a: Option<f64>,
    /// Optional integer second dimension of the underlying rectangles.
    pub p_dim: Option<usize>,
}

impl EnsembleSpec {
    pub fn gaussian(beta: f64, n: usize, t: f64, f: Vec<f64>) -> Result<Self, EnsemblesError> {
        let spec = EnsembleSpec { family: Family::GaussianSource, beta, n, t, f, a: None, p_dim: None };
        spec.validate()?;
        Ok(spec)
    }

    pub fn laguerre(
        beta: f64,
        n: usize,
        t: f64,
        f: Vec<f64>,
        a: f64,
        p_dim: Option<usize>,
    ) -> Result<Self, EnsemblesError> {
        let spec =
            EnsembleSpec { family: Family::LaguerreSource, beta, n, t, f, a: Some(a), p_dim };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), EnsemblesError> {
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(EnsemblesError::Domain(format!(
                "beta must be positive, got {}",
                self.beta
            )));
        }
        if self.n == 0 {
            return Err(EnsemblesError::Domain("dimension must be at least 1".into()));
        }
        if !(self.t.is_finite() && self.t > 0.0) {
            return Err(EnsemblesError::Domain(format!("t must be positive, got {}", self.t)));
        }
        if self.f.len() != self.n {
            return Err(EnsemblesError::Domain(format!(
                "source has {} entries, expected {}",
                self.f.len(),
                self.n
            )));
        }
        match self.family {
            Family::GaussianSource => {
                if self.a.is_some() || self.p_dim.is_some() {
                    return Err(EnsemblesError::Domain(
                        "a and p_dim apply to the Laguerre family only".into(),
                    ));
                }
            }
            Family::LaguerreSource => {
                let a = self.a.ok_or_else(|| {
                    EnsemblesError::Domain("Laguerre family requires the exponent a".into())
                })?;
                if !(a.is_finite() && a > 0.0) {
                    return Err(EnsemblesError::Domain(format!("a must be positive, got {a}")));
                }
                if self.f.iter().any(|&v| v < 0.0) {
                    return Err(EnsemblesError::Domain(
                        "Laguerre source entries must be non-negative".into(),
                    ));
                }
                if let Some(p) = self.p_dim {
                    let implied = self.beta * (p as f64 - self.n as f64 + 1.0) / 2.0;
                    if (implied - a).abs() > 1e-12 * a.max(1.0) {
                        return Err(EnsemblesError::Domain(format!(
                            "p_dim = {p} implies a = {implied}, but a = {a}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The rectangle dimension `p = 2a/beta + n - 1` as a float, derived
    /// from `a` when `p_dim` is absent.
    pub fn p_value(&self) -> Option<f64> {
        self.a.map(|a| 2.0 * a / self.beta + self.n as f64 - 1.0)
    }
}

/// Time-stepping scheme for the eigenvalue SDEs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    EulerMaruyama,
    /// Drift-tamed Euler: the drift increment is damped by
    /// `1 / (1 + dt * |drift|)`, preventing blow-up near collisions.
    TamedEuler,
}

/// Configuration for an SDE run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SdeConfig {
    pub scheme: Scheme,
    /// Macro step size; steps are halved locally when a proposal violates
    /// ordering or positivity.
    pub dt: f64,
    /// Process-time horizon to integrate to.
    pub t_final: f64,
    /// Minimal admissible gap between eigenvalues (and distance from zero
    /// for Laguerre paths).
    pub collision_floor: f64,
    pub seed: u64,
}

impl SdeConfig {
    pub fn validate(&self) -> Result<(), EnsemblesError> {
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(EnsemblesError::Domain(format!("dt must be positive, got {}", self.dt)));
        }
        if !(self.t_final.is_finite() && self.t_final > 0.0) {
            return Err(EnsemblesError::Domain(format!(
                "t_final must be positive, got {}",
                self.t_final
            )));
        }
        if !(self.collision_floor.is_finite() && self.collision_floor >= 0.0) {
            return Err(EnsemblesError::Domain("collision_floor must be non-negative".into()));
        }
        Ok(())
    }
}

/// One sampled eigenvalue configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSample {
    /// Eigenvalues sorted ascending.
    pub values: Vec<f64>,
    /// Sampling weight; always 1 for the direct samplers here.
    pub weight: f64,
}

impl EigenSample {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        EigenSample { values, weight: 1.0 }
    }
}
