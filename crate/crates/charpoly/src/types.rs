//! Query, estimate, and sampler-selection types.

use crate::error::CharPolyError;
use ensembles::{ensemble_horizon, EnsembleSpec, Family, Scheme};
use num_complex::Complex64;

/// An averaged product of characteristic polynomials.
///
/// The average runs over the eigenvalues `x_1..x_N` of `spec`; every
/// argument `s_j` contributes one factor per eigenvalue,
/// `s_j - sqrt(2/beta) x_k` for the Gaussian family and
/// `s_j - (2/beta) x_k` for the Laguerre family.
#[derive(Clone, Debug)]
pub struct CharPolyQuery {
    /// Polynomial arguments; at least one.
    pub s: Vec<Complex64>,
    /// The ensemble averaged over.
    pub spec: EnsembleSpec,
}

impl CharPolyQuery {
    pub fn new(s: Vec<Complex64>, spec: EnsembleSpec) -> Result<Self, CharPolyError> {
        if s.is_empty() {
            return Err(CharPolyError::Domain("need at least one polynomial argument".into()));
        }
        spec.validate()?;
        Ok(CharPolyQuery { s, spec })
    }

    /// Scale multiplying each eigenvalue inside a factor.
    pub fn eigen_scale(&self) -> f64 {
        match self.spec.family {
            Family::GaussianSource => (2.0 / self.spec.beta).sqrt(),
            Family::LaguerreSource => 2.0 / self.spec.beta,
        }
    }
}

/// Monte Carlo estimate of a complex mean.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MCEstimate {
    pub mean: Complex64,
    /// Standard error of the mean over the total complex variance.
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

/// Sampling backend for Monte Carlo averages.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sampler {
    /// Dense matrix realizations; beta in {1, 2} only, and the Laguerre
    /// family additionally needs an integer rectangle dimension.
    MatrixModel,
    /// Eigenvalue diffusion started from the source and run to the
    /// ensemble horizon.
    Sde { scheme: Scheme, dt: f64 },
}

impl Sampler {
    /// Matrix model when the parameters admit one, diffusion otherwise.
    pub fn auto(spec: &EnsembleSpec) -> Sampler {
        let class12 = (spec.beta - 1.0).abs() < 1e-12 || (spec.beta - 2.0).abs() < 1e-12;
        let rectangular_ok = match spec.family {
            Family::GaussianSource => true,
            Family::LaguerreSource => {
                let p = spec.p_value().expect("Laguerre spec has a");
                (p - p.round()).abs() < 1e-9 && p.round() >= spec.n as f64
            }
        };
        if class12 && rectangular_ok {
            Sampler::MatrixModel
        } else {
            Sampler::Sde { scheme: Scheme::EulerMaruyama, dt: ensemble_horizon(spec) / 2000.0 }
        }
    }
}

/// Quadrature evaluation of an averaged product.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KValue {
    pub value: Complex64,
    /// Propagated quadrature error bound (absolute).
    pub est_error: f64,
}
