//! Direct matrix-model samplers for `beta` in {1, 2}.
//!
//! Gaussian: `H = diag(f) + noise` with diagonal noise variance `t` and
//! off-diagonal entries of total variance `t/2` per real component.
//! Laguerre: `W = A^* A` for a `p x n` rectangle `A = M + G` with
//! `M^* M = diag(f)` and every real Gaussian component of `G` of variance
//! `t/2`.

use crate::error::EnsemblesError;
use crate::types::{EigenSample, EnsembleSpec, Family};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

fn beta_class(beta: f64) -> Option<u8> {
    if (beta - 1.0).abs() < 1e-12 {
        Some(1)
    } else if (beta - 2.0).abs() < 1e-12 {
        Some(2)
    } else {
        None
    }
}

fn integer_p(spec: &EnsembleSpec) -> Result<usize, EnsemblesError> {
    if let Some(p) = spec.p_dim {
        return Ok(p);
    }
    let p = spec.p_value().expect("Laguerre spec has a");
    if (p - p.round()).abs() < 1e-9 && p.round() >= spec.n as f64 {
        Ok(p.round() as usize)
    } else {
        Err(EnsemblesError::Domain(format!(
            "matrix model needs an integer rectangle dimension p >= n, got p = {p}"
        )))
    }
}

fn gaussian_eigs_real<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Vec<f64> {
    let n = spec.n;
    let sd_diag = spec.t.sqrt();
    let sd_off = (spec.t / 2.0).sqrt();
    let mut h = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        let g: f64 = StandardNormal.sample(rng);
        h[(i, i)] = spec.f[i] + sd_diag * g;
        for j in (i + 1)..n {
            let g: f64 = StandardNormal.sample(rng);
            h[(i, j)] = sd_off * g;
            h[(j, i)] = h[(i, j)];
        }
    }
    h.symmetric_eigen().eigenvalues.iter().copied().collect()
}

fn gaussian_eigs_complex<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Vec<f64> {
    let n = spec.n;
    let sd_diag = spec.t.sqrt();
    let sd_off = (spec.t / 2.0).sqrt();
    let mut h = DMatrix::<Complex64>::zeros(n, n);
    for i in 0..n {
        let g: f64 = StandardNormal.sample(rng);
        h[(i, i)] = Complex64::new(spec.f[i] + sd_diag * g, 0.0);
        for j in (i + 1)..n {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            h[(i, j)] = Complex64::new(sd_off * re, sd_off * im);
            h[(j, i)] = h[(i, j)].conj();
        }
    }
    h.symmetric_eigen().eigenvalues.iter().copied().collect()
}

fn laguerre_eigs_real<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    p: usize,
    rng: &mut R,
) -> Vec<f64> {
    let n = spec.n;
    let sd = (spec.t / 2.0).sqrt();
    let mut a = DMatrix::<f64>::zeros(p, n);
    for i in 0..p {
        for j in 0..n {
            let g: f64 = StandardNormal.sample(rng);
            a[(i, j)] = sd * g;
        }
    }
    for j in 0..n {
        a[(j, j)] += spec.f[j].sqrt();
    }
    let w = a.transpose() * a;
    w.symmetric_eigen().eigenvalues.iter().copied().collect()
}

fn laguerre_eigs_complex<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    p: usize,
    rng: &mut R,
) -> Vec<f64> {
    let n = spec.n;
    let sd = (spec.t / 2.0).sqrt();
    let mut a = DMatrix::<Complex64>::zeros(p, n);
    for i in 0..p {
        for j in 0..n {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            a[(i, j)] = Complex64::new(sd * re, sd * im);
        }
    }
    for j in 0..n {
        a[(j, j)] += Complex64::new(spec.f[j].sqrt(), 0.0);
    }
    let w = a.adjoint() * &a;
    w.symmetric_eigen().eigenvalues.iter().copied().collect()
}

/// Draw one eigenvalue configuration from the matrix model.
///
/// # Edge cases
/// Only `beta = 1` and `beta = 2` have matrix realizations here; other
/// values are a domain error directing callers to the SDE sampler. The
/// Laguerre family additionally needs an integer rectangle dimension.
pub fn sample_matrix_model<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    rng: &mut R,
) -> Result<EigenSample, EnsemblesError> {
    spec.validate()?;
    let class = beta_class(spec.beta).ok_or_else(|| {
        EnsemblesError::Domain(format!(
            "matrix models are implemented for beta in {{1, 2}}, got {}; use the SDE sampler",
            spec.beta
        ))
    })?;
    let values = match (spec.family, class) {
        (Family::GaussianSource, 1) => gaussian_eigs_real(spec, rng),
        (Family::GaussianSource, _) => gaussian_eigs_complex(spec, rng),
        (Family::LaguerreSource, class) => {
            let p = integer_p(spec)?;
            if class == 1 {
                laguerre_eigs_real(spec, p, rng)
            } else {
                laguerre_eigs_complex(spec, p, rng)
            }
        }
    };
    Ok(EigenSample::new(values))
}
