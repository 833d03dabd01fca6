//! Consistency check between the two-set `0F0`-type series at a balanced
//! `(+1, -1)` first argument and a one-set `1F1`-type series.

use crate::error::HyperfunError;
use crate::series::{hyperg_one_set, hyperg_two_set};
use crate::types::{HypergeometricSpec, TruncationPolicy};
use num_complex::Complex64;

/// Relative residual of the identity
///
/// ```text
/// F00^{(beta/2)}((1^{n/2}, (-1)^{n/2}); i y)
///   = exp(-i sum_j y_j) * F11^{(beta/2)}(n/beta; 2n/beta; 2 i y)
/// ```
///
/// for an even number `n = y.len()` of variables.
///
/// # Edge cases
/// Odd `n` is a domain error: the balanced first argument needs equally
/// many `+1` and `-1` entries.
pub fn check_1f1_identity(
    beta: f64,
    nvars: usize,
    y: &[f64],
    policy: &TruncationPolicy,
) -> Result<f64, HyperfunError> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(HyperfunError::Domain(format!("beta must be positive, got {beta}")));
    }
    if nvars == 0 || nvars % 2 != 0 {
        return Err(HyperfunError::Domain(format!(
            "the balanced-argument identity needs an even variable count, got {nvars}"
        )));
    }
    if y.len() != nvars {
        return Err(HyperfunError::Domain(format!(
            "y has {} coordinates, expected {nvars}",
            y.len()
        )));
    }

    let alpha = beta / 2.0;
    let half = nvars / 2;
    let x: Vec<Complex64> = (0..nvars)
        .map(|i| Complex64::new(if i < half { 1.0 } else { -1.0 }, 0.0))
        .collect();
    let iy: Vec<Complex64> = y.iter().map(|&t| Complex64::new(0.0, t)).collect();
    let spec00 = HypergeometricSpec::new(vec![], vec![], alpha, nvars)?;
    let lhs = hyperg_two_set(&spec00, &x, &iy, policy)?.value;

    let nf = nvars as f64;
    let spec11 = HypergeometricSpec::new(vec![nf / beta], vec![2.0 * nf / beta], alpha, nvars)?;
    let two_iy: Vec<Complex64> = y.iter().map(|&t| Complex64::new(0.0, 2.0 * t)).collect();
    let sum_y: f64 = y.iter().sum();
    let phase = Complex64::new(0.0, -sum_y).exp();
    let rhs = hyperg_one_set(&spec11, &two_iy, policy)?.value * phase;

    Ok((lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(f64::MIN_POSITIVE))
}
