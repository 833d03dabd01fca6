//! The Haar Monte Carlo oracle against the Jack series at alpha = 1.

use hyperfun::{haar_mc_0f0, hyperg_two_set, HypergeometricSpec, TruncationPolicy};
use num_complex::Complex64;

#[test]
fn two_by_two_matches_series_within_three_stderr() {
    let x = [0.9, -0.3];
    let f = [0.7, 0.2];
    let est = haar_mc_0f0(2, &x, &f, 100_000, 20240).unwrap();

    let spec = HypergeometricSpec::new(vec![], vec![], 1.0, 2).unwrap();
    let xc: Vec<Complex64> = x.iter().map(|&t| Complex64::new(t, 0.0)).collect();
    let fc: Vec<Complex64> = f.iter().map(|&t| Complex64::new(t, 0.0)).collect();
    let policy = TruncationPolicy { max_degree: 40, tail_tol: 1e-13 };
    let series = hyperg_two_set(&spec, &xc, &fc, &policy).unwrap();
    assert!(series.converged);

    let gap = (est.mean - series.value.re).abs();
    assert!(
        gap <= 3.0 * est.stderr,
        "series {} vs MC {} +- {} (gap {gap})",
        series.value.re,
        est.mean,
        est.stderr
    );
}

#[test]
fn three_by_three_matches_series_within_three_stderr() {
    let x = [1.1, 0.2, -0.6];
    let f = [0.5, -0.4, 0.3];
    let est = haar_mc_0f0(3, &x, &f, 100_000, 777).unwrap();

    let spec = HypergeometricSpec::new(vec![], vec![], 1.0, 3).unwrap();
    let xc: Vec<Complex64> = x.iter().map(|&t| Complex64::new(t, 0.0)).collect();
    let fc: Vec<Complex64> = f.iter().map(|&t| Complex64::new(t, 0.0)).collect();
    let policy = TruncationPolicy { max_degree: 40, tail_tol: 1e-13 };
    let series = hyperg_two_set(&spec, &xc, &fc, &policy).unwrap();

    let gap = (est.mean - series.value.re).abs();
    assert!(
        gap <= 3.0 * est.stderr,
        "series {} vs MC {} +- {} (gap {gap})",
        series.value.re,
        est.mean,
        est.stderr
    );
}
