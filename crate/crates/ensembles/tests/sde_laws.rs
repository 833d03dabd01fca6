//! Trace laws of the eigenvalue diffusions: the pair interactions cancel in
//! the summed process, leaving closed-form first (and for Gaussian, second)
//! moments.

use ensembles::{sample_sde_with, EnsembleSpec, Scheme, SdeConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run_traces(
    spec: &EnsembleSpec,
    cfg: &SdeConfig,
    paths: usize,
    seed: u64,
) -> (f64, f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sumsq) = (0.0f64, 0.0f64);
    for _ in 0..paths {
        let s = sample_sde_with(spec, cfg, &mut rng).unwrap();
        let tr: f64 = s.values.iter().sum();
        sum += tr;
        sumsq += tr * tr;
    }
    let mean = sum / paths as f64;
    let var = sumsq / paths as f64 - mean * mean;
    (mean, var, (var / paths as f64).sqrt())
}

#[test]
fn gaussian_trace_is_brownian() {
    // sum x_i(t) = sum f_i + sum B_i(t): mean sum f, variance N t; checked
    // at a beta with no matrix realization.
    let spec = EnsembleSpec::gaussian(1.5, 3, 0.8, vec![-1.0, 0.0, 2.0]).unwrap();
    let cfg = SdeConfig {
        scheme: Scheme::EulerMaruyama,
        dt: 2e-3,
        t_final: 0.8,
        collision_floor: 1e-12,
        seed: 0,
    };
    let paths = 6000;
    let (mean, var, stderr) = run_traces(&spec, &cfg, paths, 11);
    assert!((mean - 1.0).abs() < 5.0 * stderr, "trace mean {mean} (stderr {stderr})");
    let want_var = 3.0 * 0.8;
    let var_tol = 5.0 * want_var * (2.0 / paths as f64).sqrt();
    assert!((var - want_var).abs() < var_tol, "trace var {var} vs {want_var}");
}

#[test]
fn laguerre_trace_drift_is_linear() {
    // d sum x_i = 2 sum sqrt(x_i) dB_i + beta N p dt: mean sum f + beta N p t.
    let (beta, n, p) = (2.0, 2usize, 3.0);
    let a = beta * (p - n as f64 + 1.0) / 2.0;
    let spec = EnsembleSpec::laguerre(beta, n, 1.0, vec![0.5, 1.5], a, None).unwrap();
    let t_run = 0.35;
    let cfg = SdeConfig {
        scheme: Scheme::EulerMaruyama,
        dt: 1e-3,
        t_final: t_run,
        collision_floor: 1e-12,
        seed: 0,
    };
    let (mean, _, stderr) = run_traces(&spec, &cfg, 6000, 22);
    let want = 2.0 + beta * n as f64 * p * t_run;
    assert!(
        (mean - want).abs() < 5.0 * stderr.max(1e-3),
        "trace mean {mean} vs {want} (stderr {stderr})"
    );
}

#[test]
fn tamed_scheme_matches_trace_law() {
    let spec = EnsembleSpec::gaussian(4.0, 2, 0.5, vec![0.3, 0.3]).unwrap();
    let cfg = SdeConfig {
        scheme: Scheme::TamedEuler,
        dt: 2e-3,
        t_final: 0.5,
        collision_floor: 1e-12,
        seed: 0,
    };
    let (mean, _, stderr) = run_traces(&spec, &cfg, 6000, 33);
    assert!(
        (mean - 0.6).abs() < 5.0 * stderr.max(1e-3),
        "trace mean {mean} (stderr {stderr})"
    );
}
