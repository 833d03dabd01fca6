//! Convergence scans: the normalized averaged product at growing matrix
//! size, side by side with its window-limit value.
//!
//! For each `(N, y)` cell the scan
//! - picks the time (fixed off criticality, `N`-coupled at the transition),
//! - maps `y` to polynomial arguments through the regime's window,
//! - evaluates the averaged product (quadrature for up to three arguments,
//!   Monte Carlo above),
//! - divides by the regime normalizer in log form, and
//! - records the distance to the limit function.

use crate::config::ExperimentConfig;
use crate::error::TransitionError;
use crate::report::{scaling_for, Family};
use crate::source::{build_source, designated_entries};
use charpoly::{exact_k_gaussian, exact_k_laguerre, mc_charpoly_avg, CharPolyQuery, Sampler};
use ensembles::EnsembleSpec;
use hyperfun::{hyperg_one_set, HypergeometricSpec, TruncationPolicy};
use num_complex::Complex64;
use numeric::{LogComplex, QuadOptions};
use scalinglimits::{
    const_phi, const_psi, crit_b_z, gamma_m, gauss_g_z, hard_w_z, pearcey_p_z, EvalPolicy,
    PhiParams, PsiParams, Regime,
};

/// One `(N, y)` cell of a convergence experiment.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub n_dim: usize,
    pub y: Vec<f64>,
    /// Row RNG seed (base seed plus row index). Quadrature rows carry it
    /// for bookkeeping even though they draw no randomness.
    pub seed: u64,
    /// Averaged product in log form, including any factor the limit
    /// theorem places on its side of the quotient.
    pub k_value: LogComplex,
    /// Regime normalizer in log form.
    pub normalizer: LogComplex,
    /// Exactly `k_value / normalizer`, reduced to a complex number.
    pub ratio: Complex64,
    pub limit_value: Complex64,
    /// Distance `|ratio - limit_value|`.
    pub abs_error: f64,
    /// Propagated numerical error estimate: the product's quadrature or
    /// sampling error over the normalizer, plus the limit's own estimate.
    pub est_error: f64,
    /// Failure description when the cell aborted; such rows hold zeros in
    /// the numeric fields and stay out of tabular output.
    pub error: Option<String>,
}

/// A finished scan: the regime it ran in and one row per `(N, y)` cell,
/// serialized N-major in config order.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub config: ExperimentConfig,
    pub regime: Regime,
    pub rows: Vec<ConvergenceRow>,
}

/// Limit value shared by every matrix size at one window point.
struct LimitCell {
    value: Complex64,
    err: f64,
}

fn truncation(config: &ExperimentConfig) -> TruncationPolicy {
    TruncationPolicy { max_degree: config.max_degree, tail_tol: config.tail_tol }
}

fn eval_policy(config: &ExperimentConfig, seed: u64) -> EvalPolicy {
    EvalPolicy {
        quad: QuadOptions { tol_abs: 1e-11, tol_rel: 1e-9, max_intervals: 600 },
        series: truncation(config),
        mc_samples: config.samples,
        mc_seed: seed,
    }
}

fn to_complex(xs: &[f64]) -> Vec<Complex64> {
    xs.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// Time at which the theorems evaluate the ensemble of size `n_dim`; the
/// sampling layer then runs at this value over `n_dim`.
fn theorem_time(
    config: &ExperimentConfig,
    regime: Regime,
    n_dim: usize,
) -> Result<f64, TransitionError> {
    if regime != Regime::Critical {
        return config.t.ok_or_else(|| {
            TransitionError::Config("off-critical scans need an explicit t".into())
        });
    }
    let shift = config.tau / (n_dim as f64).sqrt();
    let t = match config.family {
        Family::Gaussian => {
            if 1.0 + shift <= 0.0 {
                return Err(TransitionError::Domain(format!(
                    "tau = {} pushes the critical time negative at N = {n_dim}",
                    config.tau
                )));
            }
            config.b * config.b / (1.0 + shift)
        }
        Family::Laguerre => config.b * (1.0 - shift),
    };
    if t <= 0.0 {
        return Err(TransitionError::Domain(format!(
            "tau = {} pushes the critical time negative at N = {n_dim}",
            config.tau
        )));
    }
    Ok(t)
}

/// The limit function of the configured regime at window point `y`.
fn limit_for(
    config: &ExperimentConfig,
    regime: Regime,
    y: &[f64],
    base_seed: u64,
) -> Result<LimitCell, TransitionError> {
    let beta = config.beta;
    let alpha = beta / 2.0;
    let n = config.n;
    let policy = eval_policy(config, base_seed);
    let y_c = to_complex(y);
    let sigma_c = to_complex(&config.sigma);
    match (config.family, regime) {
        (Family::Gaussian, Regime::Subcritical) => {
            let spec = HypergeometricSpec::new(
                vec![n as f64 / beta],
                vec![2.0 * n as f64 / beta],
                alpha,
                n,
            )?;
            let args: Vec<Complex64> = y.iter().map(|&v| Complex64::new(0.0, 2.0 * v)).collect();
            let series = hyperg_one_set(&spec, &args, &truncation(config))?;
            if !series.converged {
                return Err(TransitionError::Numerical(format!(
                    "limit series stalled at degree {} with shell {:.3e}",
                    series.degrees_used, series.last_shell
                )));
            }
            let pref = gamma_m(n / 2, 4.0 / beta);
            let phase = Complex64::new(0.0, -y.iter().sum::<f64>()).exp();
            Ok(LimitCell { value: pref * phase * series.value, err: pref * series.last_shell })
        }
        (Family::Gaussian, Regime::Critical) => {
            let v = pearcey_p_z(alpha, config.tau, &y_c, &sigma_c, &policy)?;
            Ok(LimitCell { value: v.value, err: v.est_error })
        }
        (Family::Gaussian, Regime::Supercritical) => {
            let v = gauss_g_z(alpha, &y_c, &sigma_c, &policy)?;
            Ok(LimitCell { value: v.value, err: v.est_error })
        }
        (Family::Laguerre, Regime::Subcritical) => {
            let a = config.a.expect("validated Laguerre config has a");
            let c = 2.0 * (a + n as f64 - 1.0) / beta;
            let spec = HypergeometricSpec::new(vec![], vec![c], alpha, n)?;
            let args: Vec<Complex64> = y.iter().map(|&v| Complex64::new(-v, 0.0)).collect();
            let series = hyperg_one_set(&spec, &args, &truncation(config))?;
            if !series.converged {
                return Err(TransitionError::Numerical(format!(
                    "limit series stalled at degree {} with shell {:.3e}",
                    series.degrees_used, series.last_shell
                )));
            }
            Ok(LimitCell { value: series.value, err: series.last_shell })
        }
        (Family::Laguerre, Regime::Critical) => {
            let a = config.a.expect("validated Laguerre config has a");
            let v = crit_b_z(2.0 * a / beta, alpha, config.tau, &y_c, &sigma_c, &policy)?;
            Ok(LimitCell { value: v.value, err: v.est_error })
        }
        (Family::Laguerre, Regime::Supercritical) => {
            let a = config.a.expect("validated Laguerre config has a");
            let v = hard_w_z(2.0 * a / beta, alpha, &y_c, &sigma_c, &policy)?;
            Ok(LimitCell { value: v.value, err: v.est_error })
        }
    }
}

/// The regime normalizer at matrix size `n_dim` and theorem time `t_thm`.
fn normalizer_for(
    config: &ExperimentConfig,
    regime: Regime,
    n_dim: usize,
    t_thm: f64,
) -> Result<LogComplex, TransitionError> {
    match config.family {
        Family::Gaussian => Ok(const_psi(
            regime,
            &PsiParams {
                n: config.n,
                n_dim,
                r: config.r,
                m: config.m,
                beta: config.beta,
                t: t_thm,
                b: config.b,
                f_tail: config.f_tail.clone(),
            },
        )?),
        Family::Laguerre => Ok(const_phi(
            regime,
            &PhiParams {
                n: config.n,
                n_dim,
                r: config.r,
                m: config.m,
                beta: config.beta,
                t: t_thm,
                b: config.b,
                a: config.a.expect("validated Laguerre config has a"),
                f_tail: config.f_tail.clone(),
            },
        )?),
    }
}

/// Averaged product at the mapped arguments, with its error estimate.
///
/// Up to three arguments go through the dual quadrature representation;
/// more switch to direct ensemble sampling with the row seed.
fn k_for(
    config: &ExperimentConfig,
    regime: Regime,
    n_dim: usize,
    t_thm: f64,
    s: &[Complex64],
    row_seed: u64,
) -> Result<(LogComplex, f64), TransitionError> {
    let t_ens = t_thm / n_dim as f64;
    if config.n <= 3 {
        let designated = designated_entries(config, regime, n_dim, t_thm)?;
        let policy = truncation(config);
        let opts = QuadOptions { tol_abs: 1e-12, tol_rel: 1e-10, max_intervals: 800 };
        let kv = match config.family {
            Family::Gaussian => exact_k_gaussian(
                s,
                config.beta,
                n_dim,
                t_ens,
                config.b,
                &designated,
                &policy,
                &opts,
            )?,
            Family::Laguerre => exact_k_laguerre(
                s,
                config.beta,
                n_dim,
                t_ens,
                config.a.expect("validated Laguerre config has a"),
                config.b,
                &designated,
                &policy,
                &opts,
            )?,
        };
        Ok((LogComplex::from_complex(kv.value), kv.est_error))
    } else {
        let full = build_source(config, regime, n_dim, t_thm)?;
        let spec = match config.family {
            Family::Gaussian => EnsembleSpec::gaussian(config.beta, n_dim, t_ens, full)?,
            Family::Laguerre => EnsembleSpec::laguerre(
                config.beta,
                n_dim,
                t_ens,
                full,
                config.a.expect("validated Laguerre config has a"),
                None,
            )?,
        };
        let sampler = Sampler::auto(&spec);
        let query = CharPolyQuery::new(s.to_vec(), spec)?;
        let est = mc_charpoly_avg(&query, &sampler, config.samples, row_seed)?;
        Ok((LogComplex::from_complex(est.mean), est.stderr))
    }
}

/// Log of the factor the theorems put next to the averaged product before
/// dividing; identity off the supercritical regime.
fn k_side_log_factor(config: &ExperimentConfig, regime: Regime, t_thm: f64, y: &[f64]) -> f64 {
    if regime != Regime::Supercritical {
        return 0.0;
    }
    match config.family {
        Family::Gaussian => {
            t_thm / (2.0 * config.b * config.b) * y.iter().map(|v| v * v).sum::<f64>()
        }
        Family::Laguerre => t_thm / config.b * y.iter().sum::<f64>(),
    }
}

fn compute_row(
    config: &ExperimentConfig,
    regime: Regime,
    n_dim: usize,
    y: &[f64],
    row_seed: u64,
    limit: &LimitCell,
) -> Result<ConvergenceRow, TransitionError> {
    let t_thm = theorem_time(config, regime, n_dim)?;
    let map = scaling_for(config.family, regime, t_thm, config.b);
    let s = map.map_points(y, n_dim);
    let (k_raw, k_err) = k_for(config, regime, n_dim, t_thm, &s, row_seed)?;
    let extra = k_side_log_factor(config, regime, t_thm, y);
    let k_side = k_raw * LogComplex::from_log_abs(extra);
    let normalizer = normalizer_for(config, regime, n_dim, t_thm)?;
    let ratio = (k_side / normalizer).to_complex();
    if !ratio.is_finite() {
        return Err(TransitionError::Numerical(format!(
            "normalized ratio overflowed at N = {n_dim}"
        )));
    }
    let est_error = k_err * (extra - normalizer.log_abs).exp() + limit.err;
    Ok(ConvergenceRow {
        n_dim,
        y: y.to_vec(),
        seed: row_seed,
        k_value: k_side,
        normalizer,
        ratio,
        limit_value: limit.value,
        abs_error: (ratio - limit.value).norm(),
        est_error,
        error: None,
    })
}

fn failed_row(n_dim: usize, y: &[f64], row_seed: u64, message: String) -> ConvergenceRow {
    ConvergenceRow {
        n_dim,
        y: y.to_vec(),
        seed: row_seed,
        k_value: LogComplex::zero(),
        normalizer: LogComplex::zero(),
        ratio: Complex64::new(0.0, 0.0),
        limit_value: Complex64::new(0.0, 0.0),
        abs_error: 0.0,
        est_error: 0.0,
        error: Some(message),
    }
}

/// Runs the configured experiment over every `(N, y)` cell.
///
/// Cells are distributed round-robin over `config.workers` threads and
/// merged back in config order, so output is identical for any worker
/// count: each cell's work depends only on its own index and seed.
///
/// # Errors
/// Config validation failures abort the scan; failures inside a cell
/// (stalled series, overflow, sampler errors) abort only that row, which
/// comes back flagged with the failure text.
pub fn run_convergence_scan(config: &ExperimentConfig) -> Result<ScanResult, TransitionError> {
    let regime = config.validate()?;
    let base_seed = config.seed.unwrap_or(0);
    let limits: Vec<Result<LimitCell, TransitionError>> =
        config.y_grid.iter().map(|y| limit_for(config, regime, y, base_seed)).collect();

    let ny = config.y_grid.len();
    let total = config.n_list.len() * ny;
    let workers = config.workers.max(1).min(total);
    let mut rows: Vec<Option<ConvergenceRow>> = Vec::new();
    rows.resize_with(total, || None);

    std::thread::scope(|scope| {
        let limits = &limits;
        let mut handles = Vec::with_capacity(workers);
        for tid in 0..workers {
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                let mut idx = tid;
                while idx < total {
                    let n_dim = config.n_list[idx / ny];
                    let y = &config.y_grid[idx % ny];
                    let row_seed = base_seed.wrapping_add(idx as u64);
                    let row = match &limits[idx % ny] {
                        Err(e) => failed_row(n_dim, y, row_seed, e.to_string()),
                        Ok(cell) => compute_row(config, regime, n_dim, y, row_seed, cell)
                            .unwrap_or_else(|e| failed_row(n_dim, y, row_seed, e.to_string())),
                    };
                    out.push((idx, row));
                    idx += workers;
                }
                out
            }));
        }
        for handle in handles {
            for (idx, row) in handle.join().expect("scan worker panicked") {
                rows[idx] = Some(row);
            }
        }
    });

    Ok(ScanResult {
        config: config.clone(),
        regime,
        rows: rows.into_iter().map(|r| r.expect("every cell visited")).collect(),
    })
}
