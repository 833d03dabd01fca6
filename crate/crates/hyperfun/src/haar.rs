//! Monte Carlo evaluation of the rank-one unitary group average
//! `int exp(tr(Q diag(x) Q^* diag(f))) dQ` over Haar measure on `U(n)`,
//! an independent oracle for the two-set `0F0` series at `alpha = 1`.

use crate::error::HyperfunError;
use nalgebra::DMatrix;
use num_complex::Complex64;
use numeric::ComplexMoments;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Monte Carlo mean with its standard error.
#[derive(Clone, Copy, Debug)]
pub struct HaarEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

/// Draw a Haar-distributed unitary via QR of a complex Ginibre matrix with
/// the R diagonal phases folded into Q.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    });
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        let d = r[(j, j)];
        let m = d.norm();
        let phase = if m > 0.0 { d / m } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Estimate `int exp(tr(Q diag(x) Q^* diag(f))) dQ` by direct sampling.
///
/// # Edge cases
/// `n = 1` integrates over a pure phase, so every sample equals
/// `exp(x[0] * f[0])` and the standard error is zero.
pub fn haar_mc_0f0(
    n: usize,
    x: &[f64],
    f: &[f64],
    samples: usize,
    seed: u64,
) -> Result<HaarEstimate, HyperfunError> {
    if n == 0 {
        return Err(HyperfunError::Domain("matrix dimension must be at least 1".into()));
    }
    if x.len() != n || f.len() != n {
        return Err(HyperfunError::Domain(format!(
            "x and f must each have {n} coordinates, got {} and {}",
            x.len(),
            f.len()
        )));
    }
    if samples < 2 {
        return Err(HyperfunError::Domain("need at least 2 samples".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = ComplexMoments::new();
    for _ in 0..samples {
        let q = haar_unitary(n, &mut rng);
        // tr(Q diag(x) Q^* diag(f)) = sum_{k,j} |Q_{kj}|^2 x_j f_k
        let mut t = 0.0;
        for k in 0..n {
            for j in 0..n {
                t += q[(k, j)].norm_sqr() * x[j] * f[k];
            }
        }
        acc.push(Complex64::new(t.exp(), 0.0));
    }

    Ok(HaarEstimate { mean: acc.mean().re, stderr: acc.stderr(), samples, seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn one_by_one_is_exact() {
        let est = haar_mc_0f0(1, &[0.8], &[-1.3], 10, 42).unwrap();
        assert_relative_eq!(est.mean, (0.8f64 * -1.3).exp(), max_relative = 1e-15);
        // samples agree to the last rounding of the unit phase norm
        assert!(est.stderr < 1e-15);
    }

    #[test]
    fn deterministic_per_seed() {
        let a = haar_mc_0f0(3, &[0.5, -0.2, 0.1], &[1.0, 0.0, -1.0], 500, 7).unwrap();
        let b = haar_mc_0f0(3, &[0.5, -0.2, 0.1], &[1.0, 0.0, -1.0], 500, 7).unwrap();
        assert_eq!(a.mean, b.mean);
        assert_eq!(a.stderr, b.stderr);
    }

    #[test]
    fn unitarity_of_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q = haar_unitary(4, &mut rng);
        let id = &q * q.adjoint();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id[(i, j)] - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }
}
