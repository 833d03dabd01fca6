//! Two-sided evaluation of the product-average duality.
//!
//! The `n`-fold average over an `N`-eigenvalue ensemble equals an `N`-fold
//! average over an `n`-eigenvalue ensemble with inverted coupling and the
//! roles of arguments and source swapped:
//!
//! - Gaussian: `< prod (s_j - i sqrt(2/beta) x_k) >` over the
//!   `(beta, t, N)` ensemble sourced by `f` equals
//!   `< prod (x_j - i sqrt(2/beta) f_k) >` over the `(4/beta, t, n)`
//!   ensemble sourced by `s`, with `sqrt(2/beta)` kept at the original
//!   `beta` on both sides.
//! - Laguerre: `< prod (s_j + (2/beta) x_k) >` over `(a, beta, t, N)`
//!   sourced by `f` equals `< prod (x_j + (2/beta) f_k) >` over
//!   `(2a/beta, 4/beta, t, n)` sourced by `s`.
//!
//! Both sides share the time horizon. Each side is computed independently
//! (quadrature against the sourced density, or Monte Carlo with separate
//! seeds) so agreement is evidence, not bookkeeping.

use crate::error::CharPolyError;
use crate::expect::{expect_quad, ComplexSourceSpec};
use crate::mc::mc_average_product;
use crate::types::Sampler;
use ensembles::{EnsembleSpec, Family};
use hyperfun::TruncationPolicy;
use num_complex::Complex64;
use numeric::QuadOptions;

/// Decorrelates the two sides' sample streams.
const RHS_SEED_TWIST: u64 = 0x9E37_79B9_7F4A_7C15;

/// How each side of the duality is evaluated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DualityMode {
    /// Adaptive quadrature against the sourced eigenvalue density
    /// (both sides need at most three eigenvalues).
    Quadrature,
    /// Independent Monte Carlo on each side; needs real arguments `s`.
    MonteCarlo { samples: usize, seed: u64 },
}

/// The two independently computed sides with their error estimates.
#[derive(Clone, Copy, Debug)]
pub struct DualityCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub lhs_err: f64,
    pub rhs_err: f64,
}

impl DualityCheck {
    /// Distance between the two sides.
    pub fn gap(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }

    /// Quadrature-sum of the per-side error estimates.
    pub fn combined_err(&self) -> f64 {
        self.lhs_err.hypot(self.rhs_err)
    }
}

fn validate(s: &[Complex64], n_dim: usize, beta: f64, t: f64) -> Result<bool, CharPolyError> {
    if s.is_empty() {
        return Err(CharPolyError::Domain("need at least one argument".into()));
    }
    if n_dim == 0 {
        return Err(CharPolyError::Domain("need at least one source entry".into()));
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(CharPolyError::Domain(format!("beta must be positive, got {beta}")));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(CharPolyError::Domain(format!("t must be positive, got {t}")));
    }
    let s_complex = s.iter().any(|z| z.im != 0.0);
    if s_complex && s.len() > 2 {
        return Err(CharPolyError::Unsupported(
            "complex arguments are supported for at most two factors".into(),
        ));
    }
    Ok(s_complex)
}

fn quad_sizes_ok(n: usize, n_dim: usize) -> Result<(), CharPolyError> {
    if n > 3 || n_dim > 3 {
        return Err(CharPolyError::Unsupported(
            "quadrature duality needs at most three eigenvalues on each side".into(),
        ));
    }
    Ok(())
}

/// Checks the Gaussian duality for arguments `s` against source `f`.
///
/// # Returns
/// Both sides with error estimates; `lhs` averages over the
/// `f.len()`-eigenvalue ensemble, `rhs` over the `s.len()`-eigenvalue dual.
///
/// # Edge cases
/// Complex `s` needs quadrature (the dual density continues analytically,
/// but there is nothing to sample) and at most two factors.
pub fn duality_check_gaussian(
    s: &[Complex64],
    f: &[f64],
    beta: f64,
    t: f64,
    mode: &DualityMode,
    policy: &TruncationPolicy,
    opts: &QuadOptions,
) -> Result<DualityCheck, CharPolyError> {
    let s_complex = validate(s, f.len(), beta, t)?;
    let n = s.len();
    let n_dim = f.len();
    let iscale = Complex64::new(0.0, (2.0 / beta).sqrt());
    let spec_l = EnsembleSpec::gaussian(beta, n_dim, t, f.to_vec())?;

    match *mode {
        DualityMode::Quadrature => {
            quad_sizes_ok(n, n_dim)?;
            let lhs = expect_quad(
                &ComplexSourceSpec::from_real(&spec_l),
                |x| {
                    let mut p = Complex64::new(1.0, 0.0);
                    for &sj in s {
                        for &xk in x {
                            p *= sj - iscale * xk;
                        }
                    }
                    p
                },
                policy,
                opts,
            )?;
            let dual = ComplexSourceSpec {
                family: Family::GaussianSource,
                beta: 4.0 / beta,
                n,
                t,
                f: s.to_vec(),
                a: None,
            };
            let fc: Vec<Complex64> = f.iter().map(|&v| Complex64::new(v, 0.0)).collect();
            let rhs = expect_quad(
                &dual,
                |x| {
                    let mut p = Complex64::new(1.0, 0.0);
                    for &fk in &fc {
                        for &xj in x {
                            p *= xj - iscale * fk;
                        }
                    }
                    p
                },
                policy,
                opts,
            )?;
            Ok(DualityCheck {
                lhs: lhs.value,
                rhs: rhs.value,
                lhs_err: lhs.est_error,
                rhs_err: rhs.est_error,
            })
        }
        DualityMode::MonteCarlo { samples, seed } => {
            if s_complex {
                return Err(CharPolyError::Unsupported(
                    "Monte Carlo duality needs real arguments s to sample the dual side".into(),
                ));
            }
            let lhs =
                mc_average_product(&spec_l, &Sampler::auto(&spec_l), s, iscale, samples, seed, 1)?;
            let s_real: Vec<f64> = s.iter().map(|z| z.re).collect();
            let spec_r = EnsembleSpec::gaussian(4.0 / beta, n, t, s_real)?;
            // (x_j - i c f_k) = (-i c f_k) - (-1) x_j, so the fixed factors
            // move into argument position with eigenvalue scale -1.
            let args: Vec<Complex64> = f.iter().map(|&fk| -iscale * fk).collect();
            let rhs = mc_average_product(
                &spec_r,
                &Sampler::auto(&spec_r),
                &args,
                Complex64::new(-1.0, 0.0),
                samples,
                seed ^ RHS_SEED_TWIST,
                1,
            )?;
            Ok(DualityCheck {
                lhs: lhs.mean,
                rhs: rhs.mean,
                lhs_err: lhs.stderr,
                rhs_err: rhs.stderr,
            })
        }
    }
}

/// Checks the Laguerre duality for arguments `s` against source `f` and
/// exponent `a`; the dual side runs at exponent `2a/beta` and coupling
/// `4/beta`.
pub fn duality_check_laguerre(
    s: &[Complex64],
    f: &[f64],
    a: f64,
    beta: f64,
    t: f64,
    mode: &DualityMode,
    policy: &TruncationPolicy,
    opts: &QuadOptions,
) -> Result<DualityCheck, CharPolyError> {
    let s_complex = validate(s, f.len(), beta, t)?;
    if !(a.is_finite() && a > 0.0) {
        return Err(CharPolyError::Domain(format!("a must be positive, got {a}")));
    }
    let n = s.len();
    let n_dim = f.len();
    let scale = Complex64::new(2.0 / beta, 0.0);
    let spec_l = EnsembleSpec::laguerre(beta, n_dim, t, f.to_vec(), a, None)?;
    let a_dual = 2.0 * a / beta;

    match *mode {
        DualityMode::Quadrature => {
            quad_sizes_ok(n, n_dim)?;
            let lhs = expect_quad(
                &ComplexSourceSpec::from_real(&spec_l),
                |x| {
                    let mut p = Complex64::new(1.0, 0.0);
                    for &sj in s {
                        for &xk in x {
                            p *= sj + scale * xk;
                        }
                    }
                    p
                },
                policy,
                opts,
            )?;
            let dual = ComplexSourceSpec {
                family: Family::LaguerreSource,
                beta: 4.0 / beta,
                n,
                t,
                f: s.to_vec(),
                a: Some(a_dual),
            };
            let fc: Vec<Complex64> = f.iter().map(|&v| Complex64::new(v, 0.0)).collect();
            let rhs = expect_quad(
                &dual,
                |x| {
                    let mut p = Complex64::new(1.0, 0.0);
                    for &fk in &fc {
                        for &xj in x {
                            p *= xj + scale * fk;
                        }
                    }
                    p
                },
                policy,
                opts,
            )?;
            Ok(DualityCheck {
                lhs: lhs.value,
                rhs: rhs.value,
                lhs_err: lhs.est_error,
                rhs_err: rhs.est_error,
            })
        }
        DualityMode::MonteCarlo { samples, seed } => {
            if s_complex {
                return Err(CharPolyError::Unsupported(
                    "Monte Carlo duality needs real arguments s to sample the dual side".into(),
                ));
            }
            if s.iter().any(|z| z.re < 0.0) {
                return Err(CharPolyError::Unsupported(
                    "Monte Carlo duality needs non-negative s: they source the dual ensemble"
                        .into(),
                ));
            }
            let lhs = mc_average_product(
                &spec_l,
                &Sampler::auto(&spec_l),
                s,
                -scale,
                samples,
                seed,
                1,
            )?;
            let s_real: Vec<f64> = s.iter().map(|z| z.re).collect();
            let spec_r = EnsembleSpec::laguerre(4.0 / beta, n, t, s_real, a_dual, None)?;
            let args: Vec<Complex64> = f.iter().map(|&fk| scale * fk).collect();
            let rhs = mc_average_product(
                &spec_r,
                &Sampler::auto(&spec_r),
                &args,
                Complex64::new(-1.0, 0.0),
                samples,
                seed ^ RHS_SEED_TWIST,
                1,
            )?;
            Ok(DualityCheck {
                lhs: lhs.mean,
                rhs: rhs.mean,
                lhs_err: lhs.stderr,
                rhs_err: rhs.stderr,
            })
        }
    }
}
