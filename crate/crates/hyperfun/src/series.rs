//! Partition-shell evaluation of hypergeometric functions of one and two
//! vector arguments.
//!
//! Terms are grouped by partition weight ("shells"); each shell is summed
//! with compensated summation and shells are added to a compensated total.
//! The series for a partition `kappa` of weight `d` with at most `nvars`
//! parts contributes
//!
//! ```text
//! one-set:  prod_i [a_i]_kappa / (h_kappa prod_j [b_j]_kappa) * P_kappa(x)
//! two-set:  same * P_kappa(y) / P_kappa(1^nvars)
//! ```

use crate::error::HyperfunError;
use crate::types::{HypergeometricSpec, SeriesValue, TruncationPolicy};
use combinatorics::{
    deformed_pochhammer, enumerate_partitions, hook_norm, jack_eval, jack_eval_ones,
    jack_polynomial, JackParams,
};
use num_complex::Complex64;
use numeric::KahanComplex;

fn check_arg(name: &str, arg: &[Complex64], nvars: usize) -> Result<(), HyperfunError> {
    if arg.len() != nvars {
        return Err(HyperfunError::Domain(format!(
            "{name} has {} coordinates but the spec declares nvars = {nvars}",
            arg.len()
        )));
    }
    Ok(())
}

/// Scalar series coefficient for one partition.
fn coefficient(spec: &HypergeometricSpec, kappa: &combinatorics::Partition) -> f64 {
    let mut c = 1.0 / hook_norm(kappa, spec.alpha);
    for &a in &spec.upper {
        c *= deformed_pochhammer(a, kappa, spec.alpha);
    }
    for &b in &spec.lower {
        c /= deformed_pochhammer(b, kappa, spec.alpha);
    }
    c
}

fn series(
    spec: &HypergeometricSpec,
    x: &[Complex64],
    y: Option<&[Complex64]>,
    policy: &TruncationPolicy,
) -> Result<SeriesValue, HyperfunError> {
    policy.validate()?;
    check_arg("x", x, spec.nvars)?;
    if let Some(y) = y {
        check_arg("y", y, spec.nvars)?;
    }

    let params = JackParams::new(spec.alpha, spec.nvars)?;
    let mut total = KahanComplex::new();
    let mut last_shell = 0.0f64;
    let mut small_streak = 0usize;
    let mut degrees_used = 0usize;
    let mut converged = false;

    for degree in 0..=policy.max_degree {
        let mut shell = KahanComplex::new();
        for kappa in enumerate_partitions(degree, spec.nvars) {
            let poly = jack_polynomial(&kappa, &params)?;
            let mut term = jack_eval(&poly, x)? * coefficient(spec, &kappa);
            if let Some(y) = y {
                term *= jack_eval(&poly, y)? / jack_eval_ones(&poly);
            }
            shell.add(term);
        }
        let shell_value = shell.value();
        total.add(shell_value);
        last_shell = shell_value.norm();
        degrees_used = degree;

        if last_shell <= policy.tail_tol * total.value().norm().max(1.0) {
            small_streak += 1;
            if small_streak >= 2 && degree >= 1 {
                converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }

    Ok(SeriesValue { value: total.value(), last_shell, degrees_used, converged })
}

/// Hypergeometric function of two vector arguments.
pub fn hyperg_two_set(
    spec: &HypergeometricSpec,
    x: &[Complex64],
    y: &[Complex64],
    policy: &TruncationPolicy,
) -> Result<SeriesValue, HyperfunError> {
    series(spec, x, Some(y), policy)
}

/// Hypergeometric function of a single vector argument.
pub fn hyperg_one_set(
    spec: &HypergeometricSpec,
    x: &[Complex64],
    policy: &TruncationPolicy,
) -> Result<SeriesValue, HyperfunError> {
    series(spec, x, None, policy)
}
