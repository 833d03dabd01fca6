//! Finite-size normalizers that divide the exact averages in each of the
//! three transition regimes, plus the small combinatorial constant that
//! appears in the sub-critical real-line limit.
//!
//! Everything is assembled in log-complex form: the phases are exact
//! multiples of `pi/2` (powers of `-i` and `-1`), and the magnitudes are sums
//! of logarithms, so the constants stay representable at matrix sizes where
//! the raw value would overflow `f64` by hundreds of orders of magnitude.

use crate::error::ScalingError;
use ensembles::{gaussian_log_norm, laguerre_log_norm};
use numeric::LogComplex;
use statrs::function::gamma::ln_gamma;

/// Phase of an experiment point relative to the spectral transition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Subcritical,
    Critical,
    Supercritical,
}

/// Inputs for the real-line (Gaussian-weight) normalizer.
///
/// `n` is the number of polynomial arguments, `n_dim` the matrix size, `r`
/// the number of designated source entries, and `m` how many of those are
/// rescaled into the window (`m = r` is allowed; subcritical ignores `m`).
/// `f_tail` lists the source entries that stay fixed: all `r` of them in the
/// subcritical regime, the last `r - m` in the other two.
#[derive(Clone, Debug)]
pub struct PsiParams {
    pub n: usize,
    pub n_dim: usize,
    pub r: usize,
    pub m: usize,
    pub beta: f64,
    pub t: f64,
    pub b: f64,
    pub f_tail: Vec<f64>,
}

/// Inputs for the half-line (Laguerre-weight) normalizer; `a` is the wall
/// exponent of the underlying density.
#[derive(Clone, Debug)]
pub struct PhiParams {
    pub n: usize,
    pub n_dim: usize,
    pub r: usize,
    pub m: usize,
    pub a: f64,
    pub beta: f64,
    pub t: f64,
    pub b: f64,
    pub f_tail: Vec<f64>,
}

/// `gamma_m(beta')`: the ratio of Selberg-type normalizations that survives
/// the sub-critical real-line limit at even `n = 2m`.
///
/// # Arguments
/// - `m`: half the number of polynomial arguments.
/// - `beta_prime`: the dual interaction exponent (`4/beta` in applications).
///
/// # Returns
/// `binom(2m, m) * prod_{j=1..m} Gamma(1 + beta' j/2) / Gamma(1 + beta'(m+j)/2)`.
///
/// # Edge cases
/// - `m = 0` returns 1 (empty product).
pub fn gamma_m(m: usize, beta_prime: f64) -> f64 {
    let mf = m as f64;
    let mut log = ln_gamma(2.0 * mf + 1.0) - 2.0 * ln_gamma(mf + 1.0);
    for j in 1..=m {
        let jf = j as f64;
        log += ln_gamma(1.0 + beta_prime * jf / 2.0);
        log -= ln_gamma(1.0 + beta_prime * (mf + jf) / 2.0);
    }
    log.exp()
}

fn check_counts(
    n: usize,
    n_dim: usize,
    r: usize,
    m: usize,
    tail_len: usize,
    regime: Regime,
) -> Result<(), ScalingError> {
    if n == 0 || n_dim == 0 {
        return Err(ScalingError::Domain("n and N must be at least 1".into()));
    }
    if r > n_dim {
        return Err(ScalingError::Domain(format!(
            "{r} designated source entries exceed the matrix size {n_dim}"
        )));
    }
    if m > r {
        return Err(ScalingError::Domain(format!(
            "{m} window-scaled entries exceed the source rank {r}"
        )));
    }
    let want = match regime {
        Regime::Subcritical => r,
        _ => r - m,
    };
    if tail_len != want {
        return Err(ScalingError::Domain(format!(
            "expected {want} fixed source entries for this regime, got {tail_len}"
        )));
    }
    Ok(())
}

fn check_scalars(beta: f64, t: f64, b: f64) -> Result<(), ScalingError> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(ScalingError::Domain(format!("beta must be positive, got {beta}")));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(ScalingError::Domain(format!("t must be positive, got {t}")));
    }
    if !(b.is_finite() && b >= 0.0) {
        return Err(ScalingError::Domain(format!("b must be non-negative, got {b}")));
    }
    Ok(())
}

fn need_positive_b(b: f64) -> Result<(), ScalingError> {
    if b <= 0.0 {
        return Err(ScalingError::Domain(
            "the critical and supercritical normalizers need b > 0".into(),
        ));
    }
    Ok(())
}

fn nonzero_tail(f_tail: &[f64]) -> Result<(), ScalingError> {
    if f_tail.iter().any(|&f| f == 0.0 || !f.is_finite()) {
        return Err(ScalingError::Domain(
            "fixed source entries must be finite and nonzero in this regime".into(),
        ));
    }
    Ok(())
}

/// Normalizer dividing the exact real-line average in the requested regime.
///
/// # Returns
/// The constant in log-complex form; `to_complex()` recovers the value when
/// it is representable.
///
/// # Edge cases
/// - Subcritical requires `t > b^2` and even `n`; supercritical requires
///   `t < b^2`; both critical and supercritical require `b > 0` and nonzero
///   fixed entries.
pub fn const_psi(regime: Regime, params: &PsiParams) -> Result<LogComplex, ScalingError> {
    let &PsiParams { n, n_dim, r, m, beta, t, b, ref f_tail } = params;
    check_counts(n, n_dim, r, m, f_tail.len(), regime)?;
    check_scalars(beta, t, b)?;
    let nf = n as f64;
    let nn = n_dim as f64;
    let rf = r as f64;
    let mf = m as f64;

    match regime {
        Regime::Subcritical => {
            if t <= b * b {
                return Err(ScalingError::Domain(format!(
                    "subcritical real-line regime needs t > b^2, got t = {t}, b = {b}"
                )));
            }
            if n % 2 != 0 {
                return Err(ScalingError::Domain(
                    "the subcritical real-line limit exists for even n only".into(),
                ));
            }
            let gap = t - b * b;
            let mut out = LogComplex::neg_i_pow((n * (n_dim - r)) as i64);
            let mut log = nf * nf / (2.0 * beta) * 2.0_f64.ln();
            log += (nf / beta - nf / 2.0) * (2.0 * gap).ln();
            log += (-nf / beta - (rf - 1.0) * nf / 2.0) * t.ln();
            log += -0.5 * nf * nn * (1.0 - b * b / t - t.ln());
            log += nf * nf / (2.0 * beta) * nn.ln();
            for &f in f_tail {
                log += 0.5 * nf * (gap + 2.0 * f * f / beta).ln();
            }
            out = out * LogComplex::from_log_abs(log);
            Ok(out)
        }
        Regime::Critical => {
            need_positive_b(b)?;
            nonzero_tail(f_tail)?;
            let mut out = LogComplex::neg_i_pow((n * (r + n_dim)) as i64);
            out = out * LogComplex::real_powf(b, nf * (nn - rf));
            out = out
                * LogComplex::from_log_abs(
                    (0.25 * (1.0 - mf) * nf + (nf - 1.0) * nf / (2.0 * beta)) * nn.ln(),
                );
            let scale = (2.0 / beta).sqrt();
            for &f in f_tail {
                out = out * LogComplex::real_powf(scale * f, nf);
            }
            Ok(out)
        }
        Regime::Supercritical => {
            need_positive_b(b)?;
            nonzero_tail(f_tail)?;
            if t >= b * b {
                return Err(ScalingError::Domain(format!(
                    "supercritical real-line regime needs t < b^2, got t = {t}, b = {b}"
                )));
            }
            let mut out = LogComplex::neg_i_pow((n * (n_dim + r)) as i64);
            out = out * LogComplex::real_powf(b, nf * (nn - rf));
            let ratio = b / (b * b - t).sqrt();
            out = out
                * LogComplex::real_powf(ratio, 2.0 / beta * (nf - 1.0) * nf + (mf + 1.0) * nf);
            out = out * LogComplex::real_powf(t / nn, mf * nf / 2.0);
            let scale = (2.0 / beta).sqrt();
            for &f in f_tail {
                out = out * LogComplex::real_powf(scale * f, nf);
            }
            Ok(out)
        }
    }
}

/// Normalizer dividing the exact half-line average in the requested regime.
///
/// # Edge cases
/// - Subcritical requires `t > b` and nonnegative fixed entries;
///   supercritical requires `t < b`; critical and supercritical require
///   `b > 0` and strictly positive fixed entries.
pub fn const_phi(regime: Regime, params: &PhiParams) -> Result<LogComplex, ScalingError> {
    let &PhiParams { n, n_dim, r, m, a, beta, t, b, ref f_tail } = params;
    check_counts(n, n_dim, r, m, f_tail.len(), regime)?;
    check_scalars(beta, t, b)?;
    if !(a.is_finite() && a > 0.0) {
        return Err(ScalingError::Domain(format!("wall exponent a must be positive, got {a}")));
    }
    let nf = n as f64;
    let nn = n_dim as f64;
    let rf = r as f64;
    let mf = m as f64;
    let c = 2.0 * (a + nf - 1.0) / beta;

    match regime {
        Regime::Subcritical => {
            if t <= b {
                return Err(ScalingError::Domain(format!(
                    "subcritical half-line regime needs t > b, got t = {t}, b = {b}"
                )));
            }
            if f_tail.iter().any(|&f| f < 0.0 || !f.is_finite()) {
                return Err(ScalingError::Domain(
                    "half-line source entries must be finite and nonnegative".into(),
                ));
            }
            let mut log = gaussian_log_norm(4.0 / beta, n);
            log -= laguerre_log_norm(2.0 * a / beta, 4.0 / beta, n);
            log += (2.0 * a / beta - 1.0) * nf * (1.0 - b / t).ln();
            for &f in f_tail {
                log += nf * (1.0 - b / t + 2.0 * f / (t * beta)).ln();
            }
            log += -nf * nn * (1.0 - b / t - t.ln());
            log += (nf * (nf - 1.0) / beta + (2.0 * a / beta - 0.5) * nf) * nn.ln();
            Ok(LogComplex::neg_one_pow((n * n_dim) as i64) * LogComplex::from_log_abs(log))
        }
        Regime::Critical => {
            need_positive_b(b)?;
            positive_tail(f_tail)?;
            let mut out = LogComplex::neg_one_pow((n * n_dim) as i64);
            out = out * LogComplex::real_powf(b, nf * (nn - rf) - nf * c);
            out = out * LogComplex::from_log_abs((c * nf / 2.0 - nf * mf / 2.0) * nn.ln());
            for &f in f_tail {
                out = out * LogComplex::real_powf(2.0 * f / beta, nf);
            }
            Ok(out)
        }
        Regime::Supercritical => {
            need_positive_b(b)?;
            positive_tail(f_tail)?;
            if t >= b {
                return Err(ScalingError::Domain(format!(
                    "supercritical half-line regime needs t < b, got t = {t}, b = {b}"
                )));
            }
            let mut out = LogComplex::neg_one_pow((n * n_dim) as i64);
            out = out * LogComplex::real_powf(b, nf * (nn - rf));
            out = out * LogComplex::real_powf(b / (b - t), c * nf + mf * nf);
            out = out * LogComplex::real_powf(t / nn, mf * nf);
            for &f in f_tail {
                out = out * LogComplex::real_powf(2.0 * f / beta, nf);
            }
            Ok(out)
        }
    }
}

fn positive_tail(f_tail: &[f64]) -> Result<(), ScalingError> {
    if f_tail.iter().any(|&f| f <= 0.0 || !f.is_finite()) {
        return Err(ScalingError::Domain(
            "half-line source entries must be finite and positive in this regime".into(),
        ));
    }
    Ok(())
}
