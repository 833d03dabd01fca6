//! The four limit families: quartic and Gaussian windows on the real line,
//! Bessel-kernel windows on the half line.
//!
//! All share one structure: an n-dimensional average of linear factors
//! against a per-coordinate weight, a `|Delta|^{2/alpha}` interaction, and a
//! two-set hypergeometric kernel coupling the integration variables to `y`:
//!
//! - quartic window `P`: weight `exp(-u^4/4 - tau u^2/2)` on the line,
//!   factors `(iu + sigma_k)`, exponential-type kernel at `(iu; y)`;
//! - Gaussian window `G`: weight `exp(-u^2/2)` on the line with an outer
//!   `exp(sum y^2/2)`, same factors and kernel;
//! - wall window `B`: weight `u^{a-1} exp(-tau u - u^2/2)` on the half line,
//!   factors `(u + sigma_k)`, Bessel-type kernel of index `a + (n-1)/alpha`
//!   at `(u; -y)`;
//! - wall window `W`: weight `u^{a-1} exp(-u)` with an outer `exp(sum y)`,
//!   factors `(u + sigma_k/alpha)`, same kernel.
//!
//! `n <= 3` is evaluated by adaptive quadrature in gap coordinates; `n >= 4`
//! switches to importance sampling with the weight itself as the proposal.
//! The `_z` variants accept complex `y` and `sigma` so the duality checks can
//! cross the real boundary without contour rotation.

use crate::engine::{check_series, importance_mc, ordered_quad, SeriesHealth, LOG_TRUNCATION};
use crate::error::ScalingError;
use crate::types::{EvalPolicy, LimitKind, LimitMethod, LimitSpec, LimitValue};
use ensembles::{gaussian_log_norm, laguerre_log_norm};
use hyperfun::{classical_0f1, hyperg_two_set, HypergeometricSpec};
use num_complex::Complex64;
use numeric::{decay_radius, integrate, LogComplex, QuadResult};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};
use statrs::function::gamma::ln_gamma;

#[derive(Clone, Copy)]
enum LineWeight {
    Quartic { tau: f64 },
    Gauss,
}

#[derive(Clone, Copy)]
enum EdgeWeight {
    Critical { tau: f64 },
    Hard,
}

fn validate_common(alpha: f64, _y: &[Complex64]) -> Result<(), ScalingError> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(ScalingError::Domain(format!("alpha must be positive, got {alpha}")));
    }
    Ok(())
}

/// Zero integration dimensions: the normalized average of an empty product
/// is exactly one, and any moment inserted under the integral vanishes.
fn empty_dimension_value(moment_inserted: bool) -> LimitValue {
    let value = if moment_inserted { 0.0 } else { 1.0 };
    LimitValue {
        value: Complex64::new(value, 0.0),
        est_error: 0.0,
        method: LimitMethod::Quadrature,
    }
}

fn expect_kind(spec: &LimitSpec, kind: LimitKind) -> Result<(), ScalingError> {
    if spec.kind != kind {
        return Err(ScalingError::Domain(format!(
            "spec kind {:?} does not match the requested evaluator",
            spec.kind
        )));
    }
    Ok(())
}

fn to_complex(xs: &[f64]) -> Vec<Complex64> {
    xs.iter().map(|&x| Complex64::new(x, 0.0)).collect()
}

fn finish_quad(
    outer: LogComplex,
    quad: QuadResult,
    health: SeriesHealth,
) -> Result<LimitValue, ScalingError> {
    if health.failed {
        return Err(ScalingError::Numerical(
            "kernel series did not converge inside the window integrand; raise max_degree".into(),
        ));
    }
    let scale = outer.to_complex().norm();
    if !quad.converged {
        return Err(ScalingError::Numerical(format!(
            "quadrature stalled at error {:.3e} over {} cells; raise max_intervals",
            scale * quad.est_error,
            quad.intervals
        )));
    }
    let value = (outer * LogComplex::from_complex(quad.value)).to_complex();
    if !value.is_finite() {
        return Err(ScalingError::Numerical("limit value overflowed f64".into()));
    }
    Ok(LimitValue { value, est_error: scale * quad.est_error, method: LimitMethod::Quadrature })
}

fn finish_mc(
    outer: LogComplex,
    mean: Complex64,
    stderr: f64,
    health: SeriesHealth,
) -> Result<LimitValue, ScalingError> {
    if health.failed {
        return Err(ScalingError::Numerical(
            "kernel series did not converge at a sampled point; raise max_degree".into(),
        ));
    }
    let value = (outer * LogComplex::from_complex(mean)).to_complex();
    if !value.is_finite() {
        return Err(ScalingError::Numerical("limit value overflowed f64".into()));
    }
    Ok(LimitValue {
        value,
        est_error: outer.to_complex().norm() * stderr,
        method: LimitMethod::MonteCarlo,
    })
}

/// Core for the two real-line families; `tau_moment` folds an extra
/// `-sum u^2/2` into the integrand (the tau-derivative of the quartic
/// window under the integral sign).
fn eval_real_line(
    weight: LineWeight,
    alpha: f64,
    y: &[Complex64],
    sigma: &[Complex64],
    tau_moment: bool,
    policy: &EvalPolicy,
) -> Result<LimitValue, ScalingError> {
    validate_common(alpha, y)?;
    if y.is_empty() {
        return Ok(empty_dimension_value(tau_moment));
    }
    let n = y.len();
    let m = sigma.len();
    let dexp = 2.0 / alpha;

    let log_w = move |u: f64| match weight {
        LineWeight::Quartic { tau } => -0.25 * u.powi(4) - 0.5 * tau * u * u,
        LineWeight::Gauss => -0.5 * u * u,
    };
    // The bare weight peaks at 0, or in a symmetric double well.
    let well = match weight {
        LineWeight::Quartic { tau } if tau < 0.0 => (-tau).sqrt(),
        _ => 0.0,
    };
    let shift = log_w(0.0).max(log_w(well));

    let y_abs: f64 = y.iter().map(|z| z.norm()).sum();
    let sig_max = sigma.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let growth = (n - 1) as f64 * dexp;
    let env = move |u: f64| {
        log_w(u)
            + m as f64 * (1.0 + u.abs() + sig_max).ln()
            + u.abs() * y_abs
            + growth * (1.0 + 2.0 * u.abs()).ln()
    };
    let lo = well.max(1.0).max(y_abs);
    let peak = env(0.0).max(env(well)).max(env(lo));
    let radius = decay_radius(env, peak, lo, LOG_TRUNCATION);

    let mut outer_base = LogComplex::from_log_abs(-gaussian_log_norm(dexp, n));
    if matches!(weight, LineWeight::Gauss) {
        let ysq: Complex64 = y.iter().map(|&z| z * z).sum();
        outer_base = outer_base * LogComplex::from_exp(ysq / 2.0);
    }

    let factor = move |u: f64| -> Complex64 {
        let mut p = Complex64::new(1.0, 0.0);
        for &s in sigma {
            p *= Complex64::new(0.0, u) + s;
        }
        p
    };
    let moment = move |xs: &[f64]| -> f64 {
        if tau_moment {
            -0.5 * xs.iter().map(|x| x * x).sum::<f64>()
        } else {
            1.0
        }
    };
    let y_zero = y.iter().all(|z| z.norm_sqr() == 0.0);
    let kernel_spec = if n >= 2 && !y_zero {
        Some(HypergeometricSpec::new(vec![], vec![], alpha, n)?)
    } else {
        None
    };

    if n >= 4 {
        if policy.mc_samples < 2 {
            return Err(ScalingError::Domain("need at least two Monte Carlo samples".into()));
        }
        // Per-coordinate proposal is the weight itself: Gaussian directly,
        // quartic by rejection under a Gaussian envelope.
        let log_zw = match weight {
            LineWeight::Gauss => 0.5 * (2.0 * std::f64::consts::PI).ln(),
            LineWeight::Quartic { .. } => {
                let rw = decay_radius(log_w, shift, lo, LOG_TRUNCATION);
                let q = integrate(
                    |u| Complex64::new((log_w(u) - shift).exp(), 0.0),
                    -rw,
                    rw,
                    &[-well, 0.0, well],
                    &policy.quad,
                );
                shift + q.value.re.ln()
            }
        };
        let draw: Box<dyn Fn(&mut ChaCha8Rng) -> f64> = match weight {
            LineWeight::Gauss => Box::new(|rng| rng.sample(StandardNormal)),
            LineWeight::Quartic { tau } => {
                let sp2 = 1.0 / (1.0 + tau.max(0.0));
                let sp = sp2.sqrt();
                let c = 1.0 / sp2 - tau;
                let log_env = if c > 0.0 { 0.25 * c * c } else { 0.0 };
                Box::new(move |rng| loop {
                    let u: f64 = sp * rng.sample::<f64, _>(StandardNormal);
                    let g = -0.25 * u.powi(4) - 0.5 * tau * u * u + u * u / (2.0 * sp2);
                    if rng.gen::<f64>().ln() < g - log_env {
                        return u;
                    }
                })
            }
        };
        let mut health = SeriesHealth::default();
        let mut rest = |xs: &[f64]| -> Complex64 {
            let mut p = Complex64::new(moment(xs), 0.0);
            for &x in xs {
                p *= factor(x);
            }
            if y_zero {
                return p;
            }
            let spec = kernel_spec.as_ref().expect("built for n >= 2");
            let xc: Vec<Complex64> = xs.iter().map(|&v| Complex64::new(0.0, v)).collect();
            match hyperg_two_set(spec, &xc, y, &policy.series) {
                Ok(out) => {
                    check_series(&mut health, out.converged, 1.0);
                    p * out.value
                }
                Err(_) => {
                    health.failed = true;
                    Complex64::new(0.0, 0.0)
                }
            }
        };
        let (mean, stderr) =
            importance_mc(n, dexp, policy.mc_samples, policy.mc_seed, &draw, &mut rest);
        let outer = outer_base * LogComplex::from_log_abs(n as f64 * log_zw);
        return finish_mc(outer, mean, stderr, health);
    }

    let mut health = SeriesHealth::default();
    let mut kernel = |xs: &[f64], wt: f64| -> Complex64 {
        let base = if y_zero {
            Complex64::new(1.0, 0.0)
        } else if n == 1 {
            (Complex64::new(0.0, xs[0]) * y[0]).exp()
        } else {
            let spec = kernel_spec.as_ref().expect("built for n >= 2");
            let xc: Vec<Complex64> = xs.iter().map(|&v| Complex64::new(0.0, v)).collect();
            match hyperg_two_set(spec, &xc, y, &policy.series) {
                Ok(out) => {
                    check_series(&mut health, out.converged, wt);
                    out.value
                }
                Err(_) => {
                    health.failed = true;
                    Complex64::new(0.0, 0.0)
                }
            }
        };
        base * moment(xs)
    };
    let coord_hints = [-well, 0.0, well];
    let gap_hints = [well, 2.0 * well];
    let quad = ordered_quad(
        n,
        -radius,
        radius,
        dexp,
        &coord_hints,
        &gap_hints,
        &|u| (log_w(u) - shift).exp(),
        &factor,
        &mut kernel,
        &policy.quad,
    );
    finish_quad(outer_base * LogComplex::from_log_abs(n as f64 * shift), quad, health)
}

/// Core for the two half-line families.
fn eval_half_line(
    weight: EdgeWeight,
    a: f64,
    alpha: f64,
    y: &[Complex64],
    sigma: &[Complex64],
    policy: &EvalPolicy,
) -> Result<LimitValue, ScalingError> {
    validate_common(alpha, y)?;
    if !(a.is_finite() && a > 0.0) {
        return Err(ScalingError::Domain(format!("wall exponent a must be positive, got {a}")));
    }
    if y.is_empty() {
        return Ok(empty_dimension_value(false));
    }
    let n = y.len();
    let m = sigma.len();
    let dexp = 2.0 / alpha;
    let c_index = a + (n as f64 - 1.0) / alpha;
    let sig_scale = match weight {
        EdgeWeight::Critical { .. } => 1.0,
        EdgeWeight::Hard => 1.0 / alpha,
    };

    let log_w = move |u: f64| {
        let mut v = match weight {
            EdgeWeight::Critical { tau } => -tau * u - 0.5 * u * u,
            EdgeWeight::Hard => -u,
        };
        if a != 1.0 {
            v += (a - 1.0) * u.max(f64::MIN_POSITIVE).ln();
        }
        v
    };
    // Interior maximum of the bare weight (the wall itself may dominate for
    // a < 1; the shift only needs a finite reference level).
    let u_star = match weight {
        EdgeWeight::Critical { tau } => {
            let disc = tau * tau + 4.0 * (a - 1.0);
            if disc > 0.0 {
                ((-tau + disc.sqrt()) / 2.0).max(0.0)
            } else {
                0.0
            }
        }
        EdgeWeight::Hard => (a - 1.0).max(0.0),
    };
    let y_abs: f64 = y.iter().map(|z| z.norm()).sum();
    let cands = [u_star, 1.0, a, 1.0 + y_abs];
    let mut shift = f64::NEG_INFINITY;
    for &cand in &cands {
        if cand > 0.0 {
            shift = shift.max(log_w(cand));
        }
    }

    let sig_max = sigma.iter().map(|z| z.norm()).fold(0.0, f64::max) * sig_scale;
    let growth = (n - 1) as f64 * dexp;
    let env = move |u: f64| {
        log_w(u)
            + m as f64 * (1.0 + u + sig_max).ln()
            + 2.0 * (u.max(0.0) * y_abs).sqrt()
            + growth * (1.0 + u).ln()
    };
    let mut peak = f64::NEG_INFINITY;
    for &cand in &cands {
        if cand > 0.0 {
            peak = peak.max(env(cand));
        }
    }
    let lo = u_star.max(1.0).max(a).max(y_abs);
    let radius = decay_radius(env, peak, lo, LOG_TRUNCATION);

    let mut outer_base = LogComplex::from_log_abs(-laguerre_log_norm(a, dexp, n));
    if matches!(weight, EdgeWeight::Hard) {
        let ysum: Complex64 = y.iter().sum();
        outer_base = outer_base * LogComplex::from_exp(ysum);
    }

    let factor = move |u: f64| -> Complex64 {
        let mut p = Complex64::new(1.0, 0.0);
        for &s in sigma {
            p *= Complex64::new(u, 0.0) + sig_scale * s;
        }
        p
    };
    let y_zero = y.iter().all(|z| z.norm_sqr() == 0.0);
    let kernel_spec = if n >= 2 && !y_zero {
        Some(HypergeometricSpec::new(vec![], vec![c_index], alpha, n)?)
    } else {
        None
    };

    if n >= 4 {
        if policy.mc_samples < 2 {
            return Err(ScalingError::Domain("need at least two Monte Carlo samples".into()));
        }
        // Proposal: Gamma(a, 1), exact for the wall weight; the critical
        // weight adds a rejection step under its flat envelope.
        let gamma = Gamma::new(a, 1.0)
            .map_err(|e| ScalingError::Domain(format!("invalid wall exponent: {e}")))?;
        let log_zw = match weight {
            EdgeWeight::Hard => ln_gamma(a),
            EdgeWeight::Critical { .. } => {
                let rw = decay_radius(log_w, shift, lo, LOG_TRUNCATION);
                let q = integrate(
                    |u| Complex64::new((log_w(u) - shift).exp(), 0.0),
                    0.0,
                    rw,
                    &[1e-3, 1e-2, 0.1, u_star],
                    &policy.quad,
                );
                shift + q.value.re.ln()
            }
        };
        let draw: Box<dyn Fn(&mut ChaCha8Rng) -> f64> = match weight {
            EdgeWeight::Hard => Box::new(move |rng| gamma.sample(rng)),
            EdgeWeight::Critical { tau } => {
                let log_env = if tau < 1.0 { 0.5 * (1.0 - tau) * (1.0 - tau) } else { 0.0 };
                Box::new(move |rng| loop {
                    let u: f64 = gamma.sample(rng);
                    let h = -0.5 * u * u + (1.0 - tau) * u;
                    if rng.gen::<f64>().ln() < h - log_env {
                        return u;
                    }
                })
            }
        };
        let mut health = SeriesHealth::default();
        let mut rest = |xs: &[f64]| -> Complex64 {
            let mut p = Complex64::new(1.0, 0.0);
            for &x in xs {
                p *= factor(x);
            }
            if y_zero {
                return p;
            }
            let spec = kernel_spec.as_ref().expect("built for n >= 2");
            let xc = to_complex(xs);
            let ys: Vec<Complex64> = y.iter().map(|&z| -z).collect();
            match hyperg_two_set(spec, &xc, &ys, &policy.series) {
                Ok(out) => {
                    check_series(&mut health, out.converged, 1.0);
                    p * out.value
                }
                Err(_) => {
                    health.failed = true;
                    Complex64::new(0.0, 0.0)
                }
            }
        };
        let (mean, stderr) =
            importance_mc(n, dexp, policy.mc_samples, policy.mc_seed, &draw, &mut rest);
        let outer = outer_base * LogComplex::from_log_abs(n as f64 * log_zw);
        return finish_mc(outer, mean, stderr, health);
    }

    let mut health = SeriesHealth::default();
    let mut kernel = |xs: &[f64], wt: f64| -> Complex64 {
        if y_zero {
            return Complex64::new(1.0, 0.0);
        }
        if n == 1 {
            return classical_0f1(c_index, -xs[0] * y[0]);
        }
        let spec = kernel_spec.as_ref().expect("built for n >= 2");
        let xc = to_complex(xs);
        let ys: Vec<Complex64> = y.iter().map(|&z| -z).collect();
        match hyperg_two_set(spec, &xc, &ys, &policy.series) {
            Ok(out) => {
                check_series(&mut health, out.converged, wt);
                out.value
            }
            Err(_) => {
                health.failed = true;
                Complex64::new(0.0, 0.0)
            }
        }
    };
    // Near-wall hints matter when a < 1 leaves an integrable singularity.
    let coord_hints = [1e-3, 1e-2, 0.1, 1.0, u_star, a];
    let gap_hints = [u_star.max(1.0)];
    let quad = ordered_quad(
        n,
        0.0,
        radius,
        dexp,
        &coord_hints,
        &gap_hints,
        &|u| (log_w(u) - shift).exp(),
        &factor,
        &mut kernel,
        &policy.quad,
    );
    finish_quad(outer_base * LogComplex::from_log_abs(n as f64 * shift), quad, health)
}

/// Quartic-window limit function at complex arguments.
pub fn pearcey_p_z(
    alpha: f64,
    tau: f64,
    y: &[Complex64],
    sigma: &[Complex64],
    policy: &EvalPolicy,
) -> Result<LimitValue, ScalingError> {
    if !tau.is_finite() {
        return Err(ScalingError::Domain("tau must be finite".into()));
    }
    eval_real_line(LineWeight::Quartic { tau }, alpha, y, sigma, false, policy)
}

/// Quartic-window limit function for a validated spec.
pub fn pearcey_p(spec: &LimitSpec, policy: &EvalPolicy) -> Result<LimitValue, ScalingError> {
    expect_kind(spec, LimitKind::PearceyP)?;
    spec.validate()?;
    pearcey_p_z(spec.alpha, spec.tau, &to_complex(&spec.y), &to_complex(&spec.sigma), policy)
}

/// Derivative of the quartic window in `tau`, taken under the integral sign
/// (the integrand picks up a factor `-sum u^2/2`).
pub fn pearcey_p_tau_deriv(
    alpha: f64,
    tau: f64,
    y: &[f64],
    sigma: &[f64],
    policy: &EvalPolicy,
) -> Result<LimitValue, ScalingError> {
    if !tau.is_finite() {
        return Err(ScalingError::Domain("tau must be finite".into()));
    }
    eval_real_line(
        LineWeight::Quartic { tau },
        alpha,
        &to_complex(y),
        &to_complex(sigma),
        true,
        policy,
    )
}

/// Gaussian-window limit function at complex arguments.
pub fn gauss_g_z(
    alpha: f64,
    y: &[Complex64],
    sigma: &[Complex64],
    policy: &EvalPolicy,
) -> Result<LimitValue, ScalingError> {
    eval_real_line(LineWeight::Gauss, alpha, y, sigma, false, policy)
}

/// Gaussian-window limit function for a validated spec.
pub fn gauss_g(spec: &LimitSpec, policy: &EvalPolicy) -> Result<LimitValue, ScalingError> {
    expect_kind(spec, LimitKind::GaussG)?;
    spec.validate()?;
    gauss_g_z(spec.alpha, &to_complex(&spec.y), &to_complex(&spec.sigma), policy)
}

/// Critical wall-window limit function at complex arguments.
pub fn crit_b_z(
    a: f64,
    alpha: f64,
    tau: f64,
    y: &[Complex64],
    sigma: &[Complex64],
    policy: &EvalPolicy,
) -> Result<LimitValue, ScalingError> {
    if !tau.is_finite() {
        return Err(ScalingError::Domain("tau must be finite".into()));
    }
    eval_half_line(EdgeWeight::Critical { tau }, a, alpha, y, sigma, policy)
}

/// Critical wall-window limit function for a validated spec.
pub fn crit_b(spec: &LimitSpec, policy: &EvalPolicy) -> Result<LimitValue, ScalingError> {
    expect_kind(spec, LimitKind::CritB)?;
    spec.validate()?;
    let a = spec.a.expect("validated above");
    crit_b_z(a, spec.alpha, spec.tau, &to_complex(&spec.y), &to_complex(&spec.sigma), policy)
}

/// Hard-wall limit function at complex arguments.
pub fn hard_w_z(
    a: f64,
    alpha: f64,
    y: &[Complex64],
    sigma: &[Complex64],
    policy: &EvalPolicy,
) -> Result<LimitValue, ScalingError> {
    eval_half_line(EdgeWeight::Hard, a, alpha, y, sigma, policy)
}

/// Hard-wall limit function for a validated spec.
pub fn hard_w(spec: &LimitSpec, policy: &EvalPolicy) -> Result<LimitValue, ScalingError> {
    expect_kind(spec, LimitKind::HardW)?;
    spec.validate()?;
    let a = spec.a.expect("validated above");
    hard_w_z(a, spec.alpha, &to_complex(&spec.y), &to_complex(&spec.sigma), policy)
}
