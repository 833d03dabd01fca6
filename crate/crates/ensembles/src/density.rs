//! Joint eigenvalue densities of the sourced Gaussian and Laguerre
//! ensembles, normalized over the full unordered space.

use crate::error::EnsemblesError;
use crate::norms::{gaussian_log_norm, laguerre_log_norm};
use crate::types::{EnsembleSpec, Family};
use hyperfun::{hyperg_two_set, HypergeometricSpec, TruncationPolicy};
use num_complex::Complex64;

fn log_vandermonde_abs(x: &[f64]) -> f64 {
    let mut log = 0.0;
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            log += (x[i] - x[j]).abs().ln();
        }
    }
    log
}

fn coupling_series(
    alpha: f64,
    lower: Vec<f64>,
    x: &[f64],
    y: &[f64],
    policy: &TruncationPolicy,
) -> Result<f64, EnsemblesError> {
    // A vanishing source makes every positive-degree shell vanish.
    if y.iter().all(|&v| v == 0.0) {
        return Ok(1.0);
    }
    let spec = HypergeometricSpec::new(vec![], lower, alpha, x.len())?;
    let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let yc: Vec<Complex64> = y.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    Ok(hyperg_two_set(&spec, &xc, &yc, policy)?.value.re)
}

/// Joint density of the eigenvalue configuration `x` (any order) under the
/// ensemble `spec`, integrating to one over the full space.
///
/// # Edge cases
/// Laguerre configurations need every coordinate strictly positive; the
/// density is supported there and non-positive coordinates are a domain
/// error rather than silently zero.
pub fn density(
    spec: &EnsembleSpec,
    x: &[f64],
    policy: &TruncationPolicy,
) -> Result<f64, EnsemblesError> {
    spec.validate()?;
    if x.len() != spec.n {
        return Err(EnsemblesError::Domain(format!(
            "configuration has {} coordinates, expected {}",
            x.len(),
            spec.n
        )));
    }
    let n = spec.n as f64;
    let t = spec.t;
    let beta = spec.beta;

    match spec.family {
        Family::GaussianSource => {
            let mut log = -gaussian_log_norm(beta, spec.n);
            log -= n * (2.0 + beta * (n - 1.0)) / 4.0 * t.ln();
            for (&xi, &fi) in x.iter().zip(&spec.f) {
                log -= (xi * xi + fi * fi) / (2.0 * t);
            }
            log += beta * log_vandermonde_abs(x);
            let rt = t.sqrt();
            let xs: Vec<f64> = x.iter().map(|&v| v / rt).collect();
            let ys: Vec<f64> = spec.f.iter().map(|&v| v / rt).collect();
            let series = coupling_series(2.0 / beta, vec![], &xs, &ys, policy)?;
            Ok(log.exp() * series)
        }
        Family::LaguerreSource => {
            if x.iter().any(|&v| v <= 0.0) {
                return Err(EnsemblesError::Domain(
                    "Laguerre density needs strictly positive coordinates".into(),
                ));
            }
            let a = spec.a.expect("validated Laguerre spec");
            let mut log = -laguerre_log_norm(a, beta, spec.n);
            log -= (a * n + beta * n * (n - 1.0) / 2.0) * t.ln();
            for (&xi, &fi) in x.iter().zip(&spec.f) {
                log += (a - 1.0) * xi.ln() - (xi + fi) / t;
            }
            log += beta * log_vandermonde_abs(x);
            let xs: Vec<f64> = x.iter().map(|&v| v / t).collect();
            let ys: Vec<f64> = spec.f.iter().map(|&v| v / t).collect();
            let lower = a + beta * (n - 1.0) / 2.0;
            let series = coupling_series(2.0 / beta, vec![lower], &xs, &ys, policy)?;
            Ok(log.exp() * series)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use statrs::function::gamma::gamma;

    #[test]
    fn gaussian_single_matches_normal() {
        let spec = EnsembleSpec::gaussian(1.7, 1, 0.8, vec![0.4]).unwrap();
        let policy = TruncationPolicy::default();
        for &x in &[-1.0, 0.0, 0.4, 2.3] {
            let got = density(&spec, &[x], &policy).unwrap();
            let want = (-(x - 0.4f64).powi(2) / (2.0 * 0.8)).exp()
                / (2.0 * std::f64::consts::PI * 0.8).sqrt();
            assert_relative_eq!(got, want, max_relative = 1e-10);
        }
    }

    #[test]
    fn laguerre_single_matches_gamma() {
        let a = 1.6;
        let spec = EnsembleSpec::laguerre(2.0, 1, 1.0, vec![0.0], a, None).unwrap();
        let policy = TruncationPolicy::default();
        for &x in &[0.2, 1.0, 3.5] {
            let got = density(&spec, &[x], &policy).unwrap();
            let want = x.powf(a - 1.0) * (-x).exp() / gamma(a);
            assert_relative_eq!(got, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn laguerre_rejects_nonpositive_points() {
        let spec = EnsembleSpec::laguerre(2.0, 2, 1.0, vec![0.0, 0.0], 1.0, Some(2)).unwrap();
        let policy = TruncationPolicy::default();
        assert!(density(&spec, &[-0.5, 1.0], &policy).is_err());
        assert!(density(&spec, &[0.0, 1.0], &policy).is_err());
    }

    #[test]
    fn sourceless_gaussian_reduces_to_weight_times_vandermonde() {
        let beta = 4.0;
        let spec = EnsembleSpec::gaussian(beta, 2, 1.0, vec![0.0, 0.0]).unwrap();
        let policy = TruncationPolicy::default();
        let x = [0.7, -0.3];
        let got = density(&spec, &x, &policy).unwrap();
        let want = (-(x[0] * x[0] + x[1] * x[1]) / 2.0).exp()
            * (x[0] - x[1]).abs().powf(beta)
            / crate::norms::gaussian_norm(beta, 2);
        assert_relative_eq!(got, want, max_relative = 1e-12);
    }
}
