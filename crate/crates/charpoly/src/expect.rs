//! Quadrature expectations over low-dimensional ensembles, with the source
//! continued to complex values.
//!
//! The normalization constant of a sourced ensemble does not depend on the
//! source, so the density extends to complex sources by replacing the
//! source-dependent prefactor and the coupling series with their complex
//! evaluations. Expectations integrate over the ordered sector in gap
//! coordinates `x = (u, u+v, u+v+w)`, which moves the `|Delta|^beta` kinks
//! to the boundary `v, w = 0`, and multiply by the sector count.

use crate::error::CharPolyError;
use ensembles::{gaussian_log_norm, laguerre_log_norm, EnsembleSpec, Family};
use hyperfun::{hyperg_two_set, HypergeometricSpec, TruncationPolicy};
use num_complex::Complex64;
use numeric::{decay_radius, integrate, integrate2, integrate3, QuadOptions, QuadResult};

/// Ensemble weight parameters with the source allowed to be complex.
#[derive(Clone, Debug)]
pub struct ComplexSourceSpec {
    pub family: Family,
    pub beta: f64,
    /// Number of eigenvalue coordinates.
    pub n: usize,
    /// Time horizon / variance scale; strictly positive.
    pub t: f64,
    /// Source entries, length `n`.
    pub f: Vec<Complex64>,
    /// Laguerre exponent; `None` for the Gaussian family.
    pub a: Option<f64>,
}

impl ComplexSourceSpec {
    pub fn from_real(spec: &EnsembleSpec) -> Self {
        ComplexSourceSpec {
            family: spec.family,
            beta: spec.beta,
            n: spec.n,
            t: spec.t,
            f: spec.f.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
            a: spec.a,
        }
    }

    pub fn validate(&self) -> Result<(), CharPolyError> {
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(CharPolyError::Domain(format!("beta must be positive, got {}", self.beta)));
        }
        if self.n == 0 {
            return Err(CharPolyError::Domain("dimension must be at least 1".into()));
        }
        if !(self.t.is_finite() && self.t > 0.0) {
            return Err(CharPolyError::Domain(format!("t must be positive, got {}", self.t)));
        }
        if self.f.len() != self.n {
            return Err(CharPolyError::Domain(format!(
                "source has {} entries, expected {}",
                self.f.len(),
                self.n
            )));
        }
        match self.family {
            Family::GaussianSource => {
                if self.a.is_some() {
                    return Err(CharPolyError::Domain(
                        "a applies to the Laguerre family only".into(),
                    ));
                }
            }
            Family::LaguerreSource => {
                let a = self.a.ok_or_else(|| {
                    CharPolyError::Domain("Laguerre family requires the exponent a".into())
                })?;
                if !(a.is_finite() && a > 0.0) {
                    return Err(CharPolyError::Domain(format!("a must be positive, got {a}")));
                }
            }
        }
        Ok(())
    }

    fn fmax(&self) -> f64 {
        self.f.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn log_vandermonde_abs(x: &[f64]) -> f64 {
    let mut log = 0.0;
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            log += (x[i] - x[j]).abs().ln();
        }
    }
    log
}

/// Joint density at the real configuration `x` under a complex source.
///
/// Coincides with the real-source density when every source entry is real;
/// still integrates to one over the full space for complex sources.
pub fn density_complex_source(
    spec: &ComplexSourceSpec,
    x: &[f64],
    policy: &TruncationPolicy,
) -> Result<Complex64, CharPolyError> {
    if x.len() != spec.n {
        return Err(CharPolyError::Domain(format!(
            "configuration has {} coordinates, expected {}",
            x.len(),
            spec.n
        )));
    }
    let n = spec.n as f64;
    let t = spec.t;
    let beta = spec.beta;
    let sourceless = spec.f.iter().all(|&z| z == Complex64::new(0.0, 0.0));

    match spec.family {
        Family::GaussianSource => {
            let mut log = -gaussian_log_norm(beta, spec.n);
            log -= n * (2.0 + beta * (n - 1.0)) / 4.0 * t.ln();
            log -= x.iter().map(|&v| v * v).sum::<f64>() / (2.0 * t);
            log += beta * log_vandermonde_abs(x);
            let fsq: Complex64 = spec.f.iter().map(|&z| z * z).sum();
            let pref = (-fsq / (2.0 * t)).exp();
            let series = if sourceless {
                Complex64::new(1.0, 0.0)
            } else {
                let hspec = HypergeometricSpec::new(vec![], vec![], 2.0 / beta, spec.n)?;
                let rt = t.sqrt();
                let xs: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v / rt, 0.0)).collect();
                let ys: Vec<Complex64> = spec.f.iter().map(|&z| z / rt).collect();
                hyperg_two_set(&hspec, &xs, &ys, policy)?.value
            };
            Ok(log.exp() * pref * series)
        }
        Family::LaguerreSource => {
            if x.iter().any(|&v| v <= 0.0) {
                return Err(CharPolyError::Domain(
                    "Laguerre density needs strictly positive coordinates".into(),
                ));
            }
            let a = spec.a.expect("validated Laguerre spec");
            let mut log = -laguerre_log_norm(a, beta, spec.n);
            log -= (a * n + beta * n * (n - 1.0) / 2.0) * t.ln();
            log += x.iter().map(|&v| (a - 1.0) * v.ln() - v / t).sum::<f64>();
            log += beta * log_vandermonde_abs(x);
            let fsum: Complex64 = spec.f.iter().sum();
            let pref = (-fsum / t).exp();
            let series = if sourceless {
                Complex64::new(1.0, 0.0)
            } else {
                let lower = a + beta * (n - 1.0) / 2.0;
                let hspec = HypergeometricSpec::new(vec![], vec![lower], 2.0 / beta, spec.n)?;
                let xs: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v / t, 0.0)).collect();
                let ys: Vec<Complex64> = spec.f.iter().map(|&z| z / t).collect();
                hyperg_two_set(&hspec, &xs, &ys, policy)?.value
            };
            Ok(log.exp() * pref * series)
        }
    }
}

/// Truncation radius for one coordinate: where the single-coordinate
/// envelope of the weight falls 1e-18 below its peak.
fn coordinate_radius(spec: &ComplexSourceSpec) -> f64 {
    const DROP: f64 = 42.0; // ln(1e18) plus margin
    let t = spec.t;
    let nn = spec.n as f64;
    let fmax = spec.fmax();
    match spec.family {
        Family::GaussianSource => {
            // weight <= exp(-x^2/2t + |x| fmax/t) * poly from the Vandermonde
            let env = |x: f64| {
                -x * x / (2.0 * t) + x.abs() * fmax / t
                    + spec.beta * (nn - 1.0) * (1.0 + x.abs()).ln()
            };
            let mut peak = f64::NEG_INFINITY;
            for i in 0..=100 {
                let x = (fmax + 8.0 * t.sqrt() * (1.0 + spec.beta * nn)) * i as f64 / 100.0;
                peak = peak.max(env(x));
            }
            decay_radius(env, peak, fmax.max(t.sqrt()), DROP)
        }
        Family::LaguerreSource => {
            let a = spec.a.expect("validated Laguerre spec");
            // Bessel-type coupling grows like exp(2 sqrt(x fmax)/t).
            let env = |x: f64| {
                -x / t
                    + (a - 1.0) * x.max(1e-300).ln()
                    + 2.0 * nn * (x.max(0.0) * fmax).sqrt() / t
                    + spec.beta * (nn - 1.0) * (1.0 + x).ln()
            };
            let hi0 = fmax + t * (a + spec.beta * nn + 8.0) * 4.0;
            let mut peak = f64::NEG_INFINITY;
            for i in 1..=200 {
                peak = peak.max(env(hi0 * i as f64 / 200.0));
            }
            decay_radius(env, peak, hi0.max(t), DROP)
        }
    }
}

/// Expectation of `g` under the ensemble by adaptive nested quadrature.
///
/// # Edge cases
/// Implemented for dimension up to 3; larger configurations are
/// unsupported here and belong to the Monte Carlo route.
pub fn expect_quad<G: FnMut(&[f64]) -> Complex64>(
    spec: &ComplexSourceSpec,
    mut g: G,
    policy: &TruncationPolicy,
    opts: &QuadOptions,
) -> Result<QuadResult, CharPolyError> {
    spec.validate()?;
    let radius = coordinate_radius(spec);
    let (lo, hi) = match spec.family {
        Family::GaussianSource => (-radius, radius),
        Family::LaguerreSource => (0.0, radius),
    };
    // Positions of the real parts of the source entries seed the
    // subdivision where the weight tends to peak.
    let mut marks: Vec<f64> = spec.f.iter().map(|z| z.re).collect();
    marks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let gaps: Vec<f64> = marks.windows(2).map(|w| w[1] - w[0]).collect();

    let mut worst: Option<CharPolyError> = None;
    let result = match spec.n {
        1 => {
            let mut h = |x: f64, err: &mut Option<CharPolyError>| -> Complex64 {
                match density_complex_source(spec, &[x], policy) {
                    Ok(d) => d * g(&[x]),
                    Err(e) => {
                        *err = Some(e);
                        Complex64::new(0.0, 0.0)
                    }
                }
            };
            integrate(|x| h(x, &mut worst), lo, hi, &marks, opts)
        }
        2 => {
            let span = hi - lo;
            let mut r = integrate2(
                |u, v| {
                    let x = [u, u + v];
                    if x[1] > hi {
                        return Complex64::new(0.0, 0.0);
                    }
                    match density_complex_source(spec, &x, policy) {
                        Ok(d) => d * g(&x),
                        Err(e) => {
                            worst = Some(e);
                            Complex64::new(0.0, 0.0)
                        }
                    }
                },
                (lo, hi),
                (0.0, span),
                &marks,
                &gaps,
                opts,
            );
            r.value *= 2.0;
            r.est_error *= 2.0;
            r
        }
        3 => {
            let span = hi - lo;
            let mut r = integrate3(
                |u, v, w| {
                    let x = [u, u + v, u + v + w];
                    if x[2] > hi {
                        return Complex64::new(0.0, 0.0);
                    }
                    match density_complex_source(spec, &x, policy) {
                        Ok(d) => d * g(&x),
                        Err(e) => {
                            worst = Some(e);
                            Complex64::new(0.0, 0.0)
                        }
                    }
                },
                (lo, hi),
                (0.0, span),
                (0.0, span),
                &gaps,
                opts,
            );
            r.value *= 6.0;
            r.est_error *= 6.0;
            r
        }
        _ => {
            return Err(CharPolyError::Unsupported(
                "quadrature expectations are implemented for dimension <= 3".into(),
            ))
        }
    };
    if let Some(e) = worst {
        return Err(e);
    }
    Ok(result)
}
