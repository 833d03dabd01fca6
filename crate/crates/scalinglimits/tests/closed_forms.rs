//! Pins each limit family to values obtainable without the n-dimensional
//! engine: one-dimensional Gamma-integral reductions, parity arguments,
//! scalar series, Laplace asymptotics, and the normalization identities.

use num_complex::Complex64;
use scalinglimits::{
    crit_b_z, gauss_g_z, hard_w_z, pearcey_p_tau_deriv, pearcey_p_z, EvalPolicy, LimitMethod,
};
use statrs::function::gamma::ln_gamma;

fn policy() -> EvalPolicy {
    EvalPolicy::default()
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn cv(xs: &[f64]) -> Vec<Complex64> {
    xs.iter().map(|&x| c(x)).collect()
}

/// Scalar oracle for the quartic window at the origin: the integral of
/// `exp(-u^4/4)` collapses to a Gamma function after `v = u^4/4`.
fn quartic_origin_oracle() -> f64 {
    (ln_gamma(0.25).exp() / 2.0) / std::f64::consts::PI.sqrt()
}

#[test]
fn quartic_window_origin_value() {
    let got = pearcey_p_z(1.0, 0.0, &[c(0.0)], &[], &policy()).unwrap();
    let want = quartic_origin_oracle();
    assert!((got.value.re - want).abs() < 1e-8, "got {} want {want}", got.value);
    assert!(got.value.im.abs() < 1e-10);
}

#[test]
fn quartic_window_two_dimensional_origin_value() {
    // At alpha = 1 the squared interaction expands into one-dimensional
    // moments: 2 (int u^2 e^(-u^4/4)) (int e^(-u^4/4)) = 2 sqrt(2) G(3/4)
    // G(1/4) / sqrt(2); over (2 pi) * 2 this collapses via the reflection
    // formula to 1/sqrt(2).
    let got = pearcey_p_z(1.0, 0.0, &[c(0.0), c(0.0)], &[], &policy()).unwrap();
    let want = 0.5_f64.sqrt();
    assert!((got.value.re - want).abs() < 1e-8, "got {} want {want}", got.value);
}

#[test]
fn quartic_window_concentrates_at_large_tau() {
    // Laplace expansion: sqrt(tau) P = 1 - 3/(4 tau^2) + O(tau^-4).
    let got = pearcey_p_z(1.0, 30.0, &[c(0.0)], &[], &policy()).unwrap();
    let scaled = 30.0_f64.sqrt() * got.value.re;
    assert!((scaled - 1.0).abs() < 0.05, "sqrt(tau) P = {scaled}");
    assert!(got.value.im.abs() < 1e-12);
}

#[test]
fn quartic_window_odd_factor_vanishes_by_parity() {
    let got = pearcey_p_z(1.0, 0.0, &[c(0.0)], &[c(0.0)], &policy()).unwrap();
    assert!(got.value.norm() < 1e-10, "got {}", got.value);
}

#[test]
fn quartic_window_tau_derivative_matches_finite_differences() {
    let pol = policy();
    for (alpha, tau, y) in [(1.0, 0.4, vec![0.6]), (2.0, 0.2, vec![0.3, 0.8])] {
        let d = pearcey_p_tau_deriv(alpha, tau, &y, &[], &pol).unwrap();
        let h = 1e-3;
        let up = pearcey_p_z(alpha, tau + h, &cv(&y), &[], &pol).unwrap();
        let dn = pearcey_p_z(alpha, tau - h, &cv(&y), &[], &pol).unwrap();
        let fd = (up.value - dn.value) / (2.0 * h);
        assert!(
            (d.value - fd).norm() < 1e-5,
            "alpha {alpha}: integrand route {} vs finite difference {fd}",
            d.value
        );
    }
}

#[test]
fn gaussian_window_is_one_for_a_single_argument() {
    for y in [0.0, 0.5, 1.0, 1.5, 2.0] {
        let got = gauss_g_z(1.0, &[c(y)], &[], &policy()).unwrap();
        assert!((got.value.re - 1.0).abs() < 1e-8, "y = {y}: got {}", got.value);
        assert!(got.value.im.abs() < 1e-8);
    }
}

#[test]
fn gaussian_window_linear_factor_is_sigma_minus_y() {
    let pol = policy();
    for (y, s) in [(0.0, 0.7), (0.4, 0.9), (1.2, 0.3)] {
        let got = gauss_g_z(2.0, &[c(y)], &[c(s)], &pol).unwrap();
        assert!((got.value.re - (s - y)).abs() < 1e-8, "({y},{s}): got {}", got.value);
    }
}

#[test]
fn gaussian_window_normalization_identity_in_higher_dimension() {
    let pol = policy();
    for n in [2, 3] {
        for alpha in [0.5, 2.0] {
            let y = vec![c(0.0); n];
            let got = gauss_g_z(alpha, &y, &[], &pol).unwrap();
            assert!(
                (got.value.re - 1.0).abs() < 1e-8,
                "n = {n}, alpha = {alpha}: got {}",
                got.value
            );
        }
    }
}

#[test]
fn wall_window_critical_origin_value() {
    let pol = policy();
    for a in [1.0, 0.6, 2.5] {
        let want = (((0.5 * a - 1.0) * 2.0_f64.ln()) + ln_gamma(0.5 * a) - ln_gamma(a)).exp();
        let got = crit_b_z(a, 1.0, 0.0, &[c(0.0)], &[], &pol).unwrap();
        assert!((got.value.re - want).abs() < 1e-8, "a = {a}: got {} want {want}", got.value);
    }
    // a = 1 makes the closed form sqrt(pi/2).
    let got = crit_b_z(1.0, 2.0, 0.0, &[c(0.0)], &[], &pol).unwrap();
    let want = (std::f64::consts::PI / 2.0).sqrt();
    assert!((got.value.re - want).abs() < 1e-8);
}

#[test]
fn wall_window_critical_scalar_series_oracle() {
    // At a = 1 the kernel integrates term by term:
    // sum_k (-y)^k 2^((k-1)/2) Gamma((k+1)/2) / (k!)^2.
    let pol = policy();
    for y in [0.3_f64, 1.0] {
        let mut want = 0.0;
        for k in 0..200 {
            let kf = k as f64;
            let log_term = 0.5 * (kf - 1.0) * 2.0_f64.ln() + ln_gamma(0.5 * (kf + 1.0))
                - 2.0 * ln_gamma(kf + 1.0);
            let term = log_term.exp() * (-y).powi(k);
            want += term;
            if term.abs() < 1e-18 && k > 4 {
                break;
            }
        }
        let got = crit_b_z(1.0, 1.0, 0.0, &[c(y)], &[], &pol).unwrap();
        assert!((got.value.re - want).abs() < 1e-8, "y = {y}: got {} want {want}", got.value);
        assert!(got.value.im.abs() < 1e-10);
    }
}

#[test]
fn wall_window_critical_is_polynomial_in_sigma() {
    // One linear factor per coordinate: degree n in sigma_1, so the
    // (n+1)-st difference vanishes.
    let pol = policy();
    let one = |s: f64| crit_b_z(1.3, 2.0, 0.3, &cv(&[0.4]), &[c(s)], &pol).unwrap().value;
    let (f0, f1, f2) = (one(0.0), one(0.7), one(1.4));
    let second = f2 - f1 * 2.0 + f0;
    assert!(second.norm() < 1e-7, "n = 1 second difference {second}");
    assert!((f1 - f0).norm() > 1e-3, "slope should be visible");

    let two = |s: f64| crit_b_z(1.3, 2.0, 0.3, &cv(&[0.2, 0.5]), &[c(s)], &pol).unwrap().value;
    let (g0, g1, g2, g3) = (two(0.0), two(0.5), two(1.0), two(1.5));
    let third = g3 - g2 * 3.0 + g1 * 3.0 - g0;
    assert!(third.norm() < 1e-6, "n = 2 third difference {third}");
}

#[test]
fn hard_wall_is_one_for_a_single_argument() {
    let pol = policy();
    for a in [1.0, 1.7] {
        for y in [0.0, 0.5, 1.0, 2.0] {
            let got = hard_w_z(a, 1.0, &[c(y)], &[], &pol).unwrap();
            assert!((got.value.re - 1.0).abs() < 1e-8, "a = {a}, y = {y}: got {}", got.value);
        }
    }
}

#[test]
fn hard_wall_linear_factor_closed_form() {
    let pol = policy();
    for (a, alpha, y, s) in [(1.0, 2.0, 0.3, 0.5), (2.2, 0.5, 0.8, 1.1)] {
        let got = hard_w_z(a, alpha, &[c(y)], &[c(s)], &pol).unwrap();
        let want = a - y + s / alpha;
        assert!((got.value.re - want).abs() < 1e-8, "got {} want {want}", got.value);
    }
}

#[test]
fn hard_wall_normalization_identity_in_higher_dimension() {
    let pol = policy();
    for n in [2, 3] {
        for (a, alpha) in [(1.0, 2.0), (1.5, 1.0)] {
            let y = vec![c(0.0); n];
            let got = hard_w_z(a, alpha, &y, &[], &pol).unwrap();
            assert!(
                (got.value.re - 1.0).abs() < 1e-8,
                "n = {n}, a = {a}, alpha = {alpha}: got {}",
                got.value
            );
        }
    }
}

#[test]
fn monte_carlo_route_recovers_the_normalization_identities() {
    let mut pol = policy();
    pol.mc_samples = 40_000;
    let y = vec![c(0.0); 4];
    let g = gauss_g_z(2.0, &y, &[], &pol).unwrap();
    assert_eq!(g.method, LimitMethod::MonteCarlo);
    assert!((g.value.re - 1.0).abs() < 3.0 * g.est_error, "G: {} +- {}", g.value, g.est_error);
    assert!(g.est_error < 0.2, "G stderr too loose: {}", g.est_error);

    let w = hard_w_z(1.5, 1.0, &y, &[], &pol).unwrap();
    assert_eq!(w.method, LimitMethod::MonteCarlo);
    assert!((w.value.re - 1.0).abs() < 3.0 * w.est_error, "W: {} +- {}", w.value, w.est_error);
    assert!(w.est_error < 0.2, "W stderr too loose: {}", w.est_error);

    // Fixed seed, fixed streams: the estimate is bit-stable.
    let again = gauss_g_z(2.0, &y, &[], &pol).unwrap();
    assert_eq!(g.value, again.value);
    assert_eq!(g.est_error, again.est_error);
}
