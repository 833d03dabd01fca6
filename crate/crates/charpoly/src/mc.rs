//! Monte Carlo estimation of averaged products of characteristic
//! polynomials.
//!
//! Each path draws one eigenvalue configuration and multiplies all
//! `(argument, eigenvalue)` factors in log-complex form, so products over
//! hundreds of eigenvalues cannot overflow. Path `i` always uses stream `i`
//! of the seed and the reduction runs in path order, making the estimate
//! independent of how paths are scheduled over worker threads.

use crate::error::CharPolyError;
use crate::types::{CharPolyQuery, MCEstimate, Sampler};
use ensembles::{ensemble_horizon, sample_matrix_model, sample_sde_with, EigenSample, SdeConfig};
use num_complex::Complex64;
use numeric::{ComplexMoments, LogComplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Product over all (argument, eigenvalue) pairs in log form.
fn path_product(s: &[Complex64], scale: Complex64, xs: &[f64]) -> Complex64 {
    let mut acc = LogComplex::ONE;
    for &sj in s {
        for &xk in xs {
            acc = acc * LogComplex::from_complex(sj - scale * xk);
        }
    }
    acc.to_complex()
}

/// Draw the configuration for one path, seeded by `(seed, stream index)`.
pub(crate) fn draw_path(
    spec: &ensembles::EnsembleSpec,
    sampler: &Sampler,
    seed: u64,
    index: u64,
) -> Result<EigenSample, CharPolyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let sample = match *sampler {
        Sampler::MatrixModel => sample_matrix_model(spec, &mut rng)?,
        Sampler::Sde { scheme, dt } => {
            let config = SdeConfig {
                scheme,
                dt,
                t_final: ensemble_horizon(spec),
                collision_floor: 1e-12,
                seed,
            };
            sample_sde_with(spec, &config, &mut rng)?
        }
    };
    Ok(sample)
}

/// Estimate the averaged product of characteristic polynomials by direct
/// sampling of the ensemble.
pub fn mc_charpoly_avg(
    query: &CharPolyQuery,
    sampler: &Sampler,
    samples: usize,
    seed: u64,
) -> Result<MCEstimate, CharPolyError> {
    mc_charpoly_avg_with_workers(query, sampler, samples, seed, 1)
}

/// Same estimate distributed over a fixed-size thread pool.
///
/// # Returns
/// Bitwise-identical results for any `workers >= 1`: path values depend
/// only on the path index and the reduction order is fixed.
pub fn mc_charpoly_avg_with_workers(
    query: &CharPolyQuery,
    sampler: &Sampler,
    samples: usize,
    seed: u64,
    workers: usize,
) -> Result<MCEstimate, CharPolyError> {
    let scale = Complex64::new(query.eigen_scale(), 0.0);
    mc_average_product(&query.spec, sampler, &query.s, scale, samples, seed, workers)
}

/// Sampled average of `prod_j prod_k (s_j - scale * x_k)` with an arbitrary
/// complex eigenvalue scale; backs both the plain estimator and the
/// sign-twisted products used by the duality checks.
pub(crate) fn mc_average_product(
    spec: &ensembles::EnsembleSpec,
    sampler: &Sampler,
    s: &[Complex64],
    scale: Complex64,
    samples: usize,
    seed: u64,
    workers: usize,
) -> Result<MCEstimate, CharPolyError> {
    if samples < 2 {
        return Err(CharPolyError::Domain("need at least 2 samples".into()));
    }
    if workers == 0 {
        return Err(CharPolyError::Domain("need at least one worker".into()));
    }
    let one = |i: usize| -> Result<Complex64, CharPolyError> {
        let sample = draw_path(spec, sampler, seed, i as u64)?;
        Ok(path_product(s, scale, &sample.values))
    };
    let values: Vec<Complex64> = if workers == 1 {
        (0..samples).map(one).collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| CharPolyError::Numerical(format!("thread pool: {e}")))?;
        pool.install(|| (0..samples).into_par_iter().map(one).collect::<Result<_, _>>())?
    };
    let mut acc = ComplexMoments::new();
    for v in values {
        acc.push(v);
    }
    Ok(MCEstimate { mean: acc.mean(), stderr: acc.stderr(), samples, seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ensembles::EnsembleSpec;

    #[test]
    fn worker_count_does_not_change_bits() {
        let spec = EnsembleSpec::gaussian(2.0, 3, 0.8, vec![0.5, 0.0, -0.5]).unwrap();
        let query =
            CharPolyQuery::new(vec![Complex64::new(0.3, 0.4), Complex64::new(-1.0, 0.0)], spec)
                .unwrap();
        let a = mc_charpoly_avg_with_workers(&query, &Sampler::MatrixModel, 300, 11, 1).unwrap();
        let b = mc_charpoly_avg_with_workers(&query, &Sampler::MatrixModel, 300, 11, 4).unwrap();
        assert_eq!(a.mean, b.mean);
        assert_eq!(a.stderr, b.stderr);
    }

    #[test]
    fn zero_factor_annihilates_a_path_without_poisoning_others() {
        // A path whose eigenvalue hits s exactly contributes zero, not NaN.
        let z = path_product(&[Complex64::new(1.5, 0.0)], Complex64::new(1.0, 0.0), &[1.5, 2.0]);
        assert_eq!(z, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn rejects_degenerate_requests() {
        let spec = EnsembleSpec::gaussian(2.0, 1, 1.0, vec![0.0]).unwrap();
        let query = CharPolyQuery::new(vec![Complex64::new(0.0, 0.0)], spec).unwrap();
        assert!(mc_charpoly_avg(&query, &Sampler::MatrixModel, 1, 0).is_err());
        assert!(mc_charpoly_avg_with_workers(&query, &Sampler::MatrixModel, 10, 0, 0).is_err());
    }
}
