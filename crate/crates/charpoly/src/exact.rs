//! Averaged products of characteristic polynomials evaluated by adaptive
//! quadrature of their dual integral representation.
//!
//! For `n` polynomial arguments the `N`-eigenvalue ensemble average equals
//! an `n`-dimensional integral in which the bulk source entries are
//! resummed into the weight, so the cost is independent of `N`:
//!
//! - Gaussian, bulk entries `+-sqrt(beta/2) b` in equal halves plus `r`
//!   designated entries `f_1..f_r`:
//!   `K = (-i)^{nN} / (G_{4/beta,n} t^{n/2+n(n-1)/beta}) exp(sum s^2/2t) I`
//!   with `I` integrating `exp(-x^2/2t) (x^2+b^2)^{(N-r)/2}
//!   prod_k (x - i sqrt(2/beta) f_k)` per coordinate against
//!   `|Delta|^{4/beta}` and the two-set exponential kernel at `(x/t; i s)`.
//! - Laguerre, bulk entries `beta b / 2`:
//!   `K = (-1)^{nN} / (Z_{2a/beta,4/beta,n} t^{2n(a+n-1)/beta})
//!   exp(sum s/t) I` with per-coordinate weight
//!   `x^{2a/beta-1} exp(-x/t) (x+b)^{N-r} prod_k (x + (2/beta) f_k)` against
//!   `|Delta|^{4/beta}` and the Bessel-type kernel at `(x/t; -s/t)` with
//!   index `2(a+n-1)/beta`.
//!
//! The weight is evaluated in log form shifted by its maximum, so large `N`
//! never overflows; prefactor and shift recombine through `LogComplex`.

use crate::error::CharPolyError;
use crate::types::KValue;
use ensembles::{gaussian_log_norm, laguerre_log_norm};
use hyperfun::{classical_0f1, hyperg_two_set, HypergeometricSpec, TruncationPolicy};
use num_complex::Complex64;
use numeric::{decay_radius, integrate, integrate2, integrate3, LogComplex, QuadOptions, QuadResult};

const LOG_TRUNCATION: f64 = 42.0; // weight below exp(-42) ~ 1e-18 of peak is dropped

/// Tracks whether any kernel-series evaluation failed to converge at a node
/// whose weight actually contributes.
struct SeriesHealth {
    failed: bool,
}

fn check_series(health: &mut SeriesHealth, converged: bool, weight: f64) {
    if !converged && weight > 1e-14 {
        health.failed = true;
    }
}

fn finish(
    pref: LogComplex,
    shift: f64,
    n: usize,
    quad: QuadResult,
    health: SeriesHealth,
) -> Result<KValue, CharPolyError> {
    if health.failed {
        return Err(CharPolyError::Numerical(
            "kernel series did not converge inside the dual integrand; raise max_degree".into(),
        ));
    }
    let outer = pref * LogComplex::from_log_abs(n as f64 * shift);
    let value = (outer * LogComplex::from_complex(quad.value)).to_complex();
    let est_error = outer.to_complex().norm() * quad.est_error;
    if !value.is_finite() {
        return Err(CharPolyError::Numerical(
            "dual-representation value overflowed f64; parameters too extreme".into(),
        ));
    }
    Ok(KValue { value, est_error })
}

fn validate_common(s: &[Complex64], beta: f64, n_dim: usize, t: f64) -> Result<(), CharPolyError> {
    if s.is_empty() || s.len() > 3 {
        return Err(CharPolyError::Unsupported(
            "dual quadrature handles between one and three polynomial arguments".into(),
        ));
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(CharPolyError::Domain(format!("beta must be positive, got {beta}")));
    }
    if n_dim == 0 {
        return Err(CharPolyError::Domain("dimension must be at least 1".into()));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(CharPolyError::Domain(format!("t must be positive, got {t}")));
    }
    Ok(())
}

/// Averaged product over the Gaussian ensemble at time `t` with bulk source
/// `+-sqrt(beta/2) b` (in equal halves) and designated entries `spikes`.
///
/// # Edge cases
/// - `b > 0` needs `n_dim - spikes.len()` even so the bulk splits in halves;
///   `b = 0` has no parity constraint (the bulk factor is a signed power).
/// - Cost is independent of `n_dim`, but at most three arguments `s`.
pub fn exact_k_gaussian(
    s: &[Complex64],
    beta: f64,
    n_dim: usize,
    t: f64,
    b: f64,
    spikes: &[f64],
    policy: &TruncationPolicy,
    opts: &QuadOptions,
) -> Result<KValue, CharPolyError> {
    validate_common(s, beta, n_dim, t)?;
    if !(b.is_finite() && b >= 0.0) {
        return Err(CharPolyError::Domain(format!("b must be non-negative, got {b}")));
    }
    let r = spikes.len();
    if r > n_dim {
        return Err(CharPolyError::Domain(format!(
            "{r} designated source entries exceed the dimension {n_dim}"
        )));
    }
    let nfree = n_dim - r;
    if b > 0.0 && nfree % 2 != 0 {
        return Err(CharPolyError::Domain(format!(
            "bulk entries come in +- pairs: need n_dim - spikes even, got {nfree}"
        )));
    }
    let n = s.len();
    let scale = (2.0 / beta).sqrt();
    let c_bulk = nfree as f64 / 2.0;
    let signed_bulk = b == 0.0 && nfree % 2 == 1;

    // Log-magnitude of the per-coordinate weight, bulk included.
    let m = move |x: f64| {
        let mut v = -x * x / (2.0 * t);
        if c_bulk > 0.0 {
            v += c_bulk * (x * x + b * b).ln();
        }
        v
    };
    let x_stat = (nfree as f64 * t - b * b).max(0.0).sqrt();
    let mut shift = m(x_stat);
    if b > 0.0 || c_bulk == 0.0 {
        shift = shift.max(m(0.0));
    }

    let s_sum: f64 = s.iter().map(|z| z.norm()).sum();
    let spike_log = move |x: f64| -> f64 {
        spikes.iter().map(|&f| 0.5 * (x * x + scale * scale * f * f).ln()).sum()
    };
    let env = move |x: f64| m(x) + spike_log(x) + x.abs() * s_sum / t;
    let peak = env(x_stat).max(env(x_stat + t.sqrt()));
    let radius = decay_radius(env, peak, x_stat.max(t.sqrt()), LOG_TRUNCATION);

    let mut health = SeriesHealth { failed: false };
    let kernel_spec = if n >= 2 {
        Some(HypergeometricSpec::new(vec![], vec![], beta / 2.0, n)?)
    } else {
        None
    };

    let phi = |x: f64| -> (f64, Complex64) {
        let w = (m(x) - shift).exp();
        let sign = if signed_bulk && x < 0.0 { -1.0 } else { 1.0 };
        let mut rest = Complex64::new(sign, 0.0);
        for &f in spikes {
            rest *= Complex64::new(x, -scale * f);
        }
        (w, rest)
    };
    let kernel = |xs: &[f64], weight: f64, health: &mut SeriesHealth| -> Complex64 {
        if n == 1 {
            return (Complex64::new(0.0, 1.0) * s[0] * xs[0] / t).exp();
        }
        let spec = kernel_spec.as_ref().expect("built for n >= 2");
        let xc: Vec<Complex64> = xs.iter().map(|&v| Complex64::new(v / t, 0.0)).collect();
        let ys: Vec<Complex64> = s.iter().map(|&z| Complex64::new(0.0, 1.0) * z).collect();
        match hyperg_two_set(spec, &xc, &ys, policy) {
            Ok(out) => {
                check_series(health, out.converged, weight);
                out.value
            }
            Err(_) => {
                health.failed = true;
                Complex64::new(0.0, 0.0)
            }
        }
    };

    let dexp = 4.0 / beta;
    let hints = [-x_stat, 0.0, x_stat];
    let gap_hints = [2.0 * x_stat];
    let all_hints = [-x_stat, 0.0, x_stat, 2.0 * x_stat];
    let quad = match n {
        1 => integrate(
            |x| {
                let (w, rest) = phi(x);
                let k = kernel(&[x], w, &mut health);
                w * rest * k
            },
            -radius,
            radius,
            &hints,
            opts,
        ),
        2 => {
            let mut q = integrate2(
                |u, v| {
                    if u + v > radius {
                        return Complex64::new(0.0, 0.0);
                    }
                    let (w0, r0) = phi(u);
                    let (w1, r1) = phi(u + v);
                    let w = w0 * w1 * v.powf(dexp);
                    w * r0 * r1 * kernel(&[u, u + v], w, &mut health)
                },
                (-radius, radius),
                (0.0, 2.0 * radius),
                &hints,
                &gap_hints,
                opts,
            );
            q.value *= 2.0;
            q.est_error *= 2.0;
            q
        }
        _ => {
            let mut q = integrate3(
                |u, v, w| {
                    if u + v + w > radius {
                        return Complex64::new(0.0, 0.0);
                    }
                    let (w0, r0) = phi(u);
                    let (w1, r1) = phi(u + v);
                    let (w2, r2) = phi(u + v + w);
                    let wt = w0 * w1 * w2 * (v * w * (v + w)).powf(dexp);
                    wt * r0 * r1 * r2 * kernel(&[u, u + v, u + v + w], wt, &mut health)
                },
                (-radius, radius),
                (0.0, 2.0 * radius),
                (0.0, 2.0 * radius),
                &all_hints,
                opts,
            );
            q.value *= 6.0;
            q.est_error *= 6.0;
            q
        }
    };

    let ssq: Complex64 = s.iter().map(|&z| z * z).sum();
    let pref = LogComplex::neg_i_pow((n * n_dim) as i64)
        * LogComplex::from_log_abs(
            -gaussian_log_norm(4.0 / beta, n)
                - (n as f64 / 2.0 + (n * (n - 1)) as f64 / beta) * t.ln(),
        )
        * LogComplex::from_exp(ssq / (2.0 * t));
    finish(pref, shift, n, quad, health)
}

/// Averaged product over the Laguerre ensemble at time `t` with exponent
/// `a`, bulk source `beta b / 2`, and designated entries `spikes`.
///
/// # Edge cases
/// `b = 0` places the whole bulk at the hard edge and is fully supported;
/// designated entries must be non-negative like any Laguerre source.
pub fn exact_k_laguerre(
    s: &[Complex64],
    beta: f64,
    n_dim: usize,
    t: f64,
    a: f64,
    b: f64,
    spikes: &[f64],
    policy: &TruncationPolicy,
    opts: &QuadOptions,
) -> Result<KValue, CharPolyError> {
    validate_common(s, beta, n_dim, t)?;
    if !(a.is_finite() && a > 0.0) {
        return Err(CharPolyError::Domain(format!("a must be positive, got {a}")));
    }
    if !(b.is_finite() && b >= 0.0) {
        return Err(CharPolyError::Domain(format!("b must be non-negative, got {b}")));
    }
    if spikes.iter().any(|&f| f < 0.0) {
        return Err(CharPolyError::Domain("designated source entries must be non-negative".into()));
    }
    let r = spikes.len();
    if r > n_dim {
        return Err(CharPolyError::Domain(format!(
            "{r} designated source entries exceed the dimension {n_dim}"
        )));
    }
    let nfree = (n_dim - r) as f64;
    let n = s.len();
    let scale = 2.0 / beta;
    let ashift = 2.0 * a / beta - 1.0;
    let c = 2.0 * (a + n as f64 - 1.0) / beta;

    let m = move |x: f64| {
        let mut v = -x / t;
        if ashift != 0.0 {
            v += ashift * x.max(f64::MIN_POSITIVE).ln();
        }
        if nfree > 0.0 {
            v += nfree * (x + b).ln();
        }
        v
    };
    // Stationary point of m on the positive axis (largest real root of
    // x^2 + Bx + C after clearing denominators), zero when none exists.
    let bq = b - t * (ashift + nfree);
    let cq = -t * b * ashift;
    let disc = bq * bq - 4.0 * cq;
    let x_stat = if disc >= 0.0 { ((-bq + disc.sqrt()) / 2.0).max(0.0) } else { 0.0 };
    let mut shift = f64::NEG_INFINITY;
    for cand in [x_stat, t, t * (a + nfree).max(1.0)] {
        if cand > 0.0 {
            shift = shift.max(m(cand));
        }
    }

    let s_sum: f64 = s.iter().map(|z| z.norm()).sum();
    let spike_log = move |x: f64| -> f64 {
        spikes.iter().map(|&f| (x + scale * f).max(f64::MIN_POSITIVE).ln()).sum()
    };
    let env = move |x: f64| m(x) + spike_log(x) + 2.0 * (x.max(0.0) * s_sum).sqrt() / t;
    let mut peak = f64::NEG_INFINITY;
    for cand in [x_stat, t, t * (a + nfree).max(1.0)] {
        if cand > 0.0 {
            peak = peak.max(env(cand));
        }
    }
    let radius = decay_radius(env, peak, x_stat.max(t), LOG_TRUNCATION);

    let mut health = SeriesHealth { failed: false };
    let kernel_spec = if n >= 2 {
        Some(HypergeometricSpec::new(vec![], vec![c], beta / 2.0, n)?)
    } else {
        None
    };

    let phi = |x: f64| -> (f64, Complex64) {
        let w = (m(x) - shift).exp();
        let mut rest = Complex64::new(1.0, 0.0);
        for &f in spikes {
            rest *= Complex64::new(x + scale * f, 0.0);
        }
        (w, rest)
    };
    let kernel = |xs: &[f64], weight: f64, health: &mut SeriesHealth| -> Complex64 {
        if n == 1 {
            return classical_0f1(c, -s[0] * xs[0] / (t * t));
        }
        let spec = kernel_spec.as_ref().expect("built for n >= 2");
        let xc: Vec<Complex64> = xs.iter().map(|&v| Complex64::new(v / t, 0.0)).collect();
        let ys: Vec<Complex64> = s.iter().map(|&z| -z / t).collect();
        match hyperg_two_set(spec, &xc, &ys, policy) {
            Ok(out) => {
                check_series(health, out.converged, weight);
                out.value
            }
            Err(_) => {
                health.failed = true;
                Complex64::new(0.0, 0.0)
            }
        }
    };

    let dexp = 4.0 / beta;
    let hints = [x_stat];
    let quad = match n {
        1 => integrate(
            |x| {
                let (w, rest) = phi(x);
                w * rest * kernel(&[x], w, &mut health)
            },
            0.0,
            radius,
            &hints,
            opts,
        ),
        2 => {
            let mut q = integrate2(
                |u, v| {
                    if u + v > radius {
                        return Complex64::new(0.0, 0.0);
                    }
                    let (w0, r0) = phi(u);
                    let (w1, r1) = phi(u + v);
                    let w = w0 * w1 * v.powf(dexp);
                    w * r0 * r1 * kernel(&[u, u + v], w, &mut health)
                },
                (0.0, radius),
                (0.0, radius),
                &hints,
                &[],
                opts,
            );
            q.value *= 2.0;
            q.est_error *= 2.0;
            q
        }
        _ => {
            let mut q = integrate3(
                |u, v, w| {
                    if u + v + w > radius {
                        return Complex64::new(0.0, 0.0);
                    }
                    let (w0, r0) = phi(u);
                    let (w1, r1) = phi(u + v);
                    let (w2, r2) = phi(u + v + w);
                    let wt = w0 * w1 * w2 * (v * w * (v + w)).powf(dexp);
                    wt * r0 * r1 * r2 * kernel(&[u, u + v, u + v + w], wt, &mut health)
                },
                (0.0, radius),
                (0.0, radius),
                (0.0, radius),
                &hints,
                opts,
            );
            q.value *= 6.0;
            q.est_error *= 6.0;
            q
        }
    };

    let ssum_c: Complex64 = s.iter().sum();
    let pref = LogComplex::neg_one_pow((n * n_dim) as i64)
        * LogComplex::from_log_abs(
            -laguerre_log_norm(2.0 * a / beta, 4.0 / beta, n)
                - 2.0 * (n as f64) * (a + n as f64 - 1.0) / beta * t.ln(),
        )
        * LogComplex::from_exp(ssum_c / t);
    finish(pref, shift, n, quad, health)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn policy() -> TruncationPolicy {
        TruncationPolicy { max_degree: 60, tail_tol: 1e-12 }
    }

    fn opts() -> QuadOptions {
        QuadOptions { tol_abs: 1e-12, tol_rel: 1e-10, max_intervals: 400 }
    }

    #[test]
    fn gaussian_single_argument_single_eigenvalue() {
        // One standard Gaussian eigenvalue: the average is s itself.
        let s = Complex64::new(0.37, 0.21);
        let k = exact_k_gaussian(&[s], 2.0, 1, 1.0, 0.0, &[], &policy(), &opts()).unwrap();
        assert!((k.value - s).norm() < 1e-9, "got {}", k.value);
    }

    #[test]
    fn gaussian_parity_rule() {
        let s = [Complex64::new(0.1, 0.0)];
        assert!(exact_k_gaussian(&s, 2.0, 3, 1.0, 1.0, &[], &policy(), &opts()).is_err());
        assert!(exact_k_gaussian(&s, 2.0, 3, 1.0, 0.0, &[], &policy(), &opts()).is_ok());
        assert!(exact_k_gaussian(&s, 2.0, 4, 1.0, 1.0, &[], &policy(), &opts()).is_ok());
    }

    #[test]
    fn laguerre_single_argument_unit_exponent() {
        // One Exp(1) eigenvalue at beta = 2: the average is s - 1.
        let s = Complex64::new(1.4, -0.6);
        let k = exact_k_laguerre(&[s], 2.0, 1, 1.0, 1.0, 0.0, &[], &policy(), &opts()).unwrap();
        assert!((k.value - (s - 1.0)).norm() < 1e-9, "got {}", k.value);
    }

    #[test]
    fn laguerre_bulk_source_shifts_the_mean() {
        // With one bulk entry beta*b/2 = b the mean moves to 1 + b.
        let s = Complex64::new(0.9, 0.3);
        let b = 0.7;
        let k = exact_k_laguerre(&[s], 2.0, 1, 1.0, 1.0, b, &[], &policy(), &opts()).unwrap();
        assert!((k.value - (s - (1.0 + b))).norm() < 1e-9, "got {}", k.value);
    }

    #[test]
    fn rejects_four_arguments() {
        let s = vec![Complex64::new(0.0, 0.0); 4];
        assert!(exact_k_gaussian(&s, 2.0, 2, 1.0, 0.0, &[], &policy(), &opts()).is_err());
    }
}
