//! Source-vector construction: the designated entries under each regime's
//! window scaling, followed by the bulk pattern that pins the spectral edge
//! at `+-b` (real line) or `b` (half line).

use crate::config::ExperimentConfig;
use crate::error::TransitionError;
use crate::report::Family;
use scalinglimits::Regime;

/// The `r` designated source entries for matrix size `n_dim` at time `t`.
///
/// Off criticality every entry is a fixed config value; in the critical and
/// supercritical regimes the first `m` entries carry the window coordinates
/// `sigma` under the regime's `N`-dependent scaling.
pub fn designated_entries(
    config: &ExperimentConfig,
    regime: Regime,
    n_dim: usize,
    t: f64,
) -> Result<Vec<f64>, TransitionError> {
    let b = config.b;
    let beta = config.beta;
    let nn = n_dim as f64;
    let scale = match (config.family, regime) {
        (_, Regime::Subcritical) => {
            return Ok(config.f_tail.clone());
        }
        (Family::Gaussian, Regime::Critical) => (beta / 2.0).sqrt() / nn.powf(0.25),
        (Family::Gaussian, Regime::Supercritical) => {
            if t >= b * b {
                return Err(TransitionError::Domain(format!(
                    "supercritical real-line scaling needs t < b^2, got t = {t}, b = {b}"
                )));
            }
            (beta * t * b * b / (2.0 * (b * b - t))).sqrt() / nn.sqrt()
        }
        (Family::Laguerre, Regime::Critical) => beta * b / (2.0 * nn.sqrt()),
        (Family::Laguerre, Regime::Supercritical) => {
            if t >= b {
                return Err(TransitionError::Domain(format!(
                    "supercritical half-line scaling needs t < b, got t = {t}, b = {b}"
                )));
            }
            b * t / ((b - t) * nn)
        }
    };
    let mut f: Vec<f64> = config.sigma.iter().map(|&s| scale * s).collect();
    f.extend_from_slice(&config.f_tail);
    Ok(f)
}

/// The full length-`n_dim` source vector: designated entries first, then
/// the bulk copies.
///
/// # Edge cases
/// - Real-line family: `n_dim + r` must be even so the bulk splits into
///   equal `+sqrt(beta/2) b` and `-sqrt(beta/2) b` halves.
/// - Half-line family: bulk entries are `beta b / 2`, and every designated
///   entry must be nonnegative.
pub fn build_source(
    config: &ExperimentConfig,
    regime: Regime,
    n_dim: usize,
    t: f64,
) -> Result<Vec<f64>, TransitionError> {
    let r = config.r;
    if r > n_dim {
        return Err(TransitionError::Domain(format!(
            "{r} designated source entries exceed the matrix size {n_dim}"
        )));
    }
    let mut f = designated_entries(config, regime, n_dim, t)?;
    if f.len() != r {
        return Err(TransitionError::Domain(format!(
            "designated entries resolved to {} values, expected r = {r}",
            f.len()
        )));
    }
    match config.family {
        Family::Gaussian => {
            if (n_dim + r) % 2 != 0 {
                return Err(TransitionError::Domain(format!(
                    "the bulk splits into equal halves only when N + r is even; N = {n_dim}, r = {r}"
                )));
            }
            let edge = (config.beta / 2.0).sqrt() * config.b;
            let half = (n_dim - r) / 2;
            f.extend(std::iter::repeat(edge).take(half));
            f.extend(std::iter::repeat(-edge).take(n_dim - r - half));
        }
        Family::Laguerre => {
            if f.iter().any(|&v| v < 0.0) {
                return Err(TransitionError::Domain(
                    "half-line source entries must be nonnegative".into(),
                ));
            }
            let edge = config.beta * config.b / 2.0;
            f.extend(std::iter::repeat(edge).take(n_dim - r));
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::OutputFormat;

    fn config(family: Family, n: usize, r: usize, m: usize) -> ExperimentConfig {
        ExperimentConfig {
            family,
            beta: 2.0,
            n,
            r,
            m,
            b: 1.0,
            a: if family == Family::Laguerre { Some(1.0) } else { None },
            t: None,
            tau: 0.0,
            y_grid: vec![vec![0.0; n]],
            sigma: vec![0.5; m],
            f_tail: vec![],
            n_list: vec![4],
            max_degree: 60,
            tail_tol: 1e-12,
            samples: 100,
            seed: Some(1),
            workers: 1,
            out: None,
            format: OutputFormat::Csv,
        }
    }

    #[test]
    fn real_line_bulk_splits_into_signed_halves() {
        let c = config(Family::Gaussian, 1, 0, 0);
        let f = build_source(&c, Regime::Critical, 4, 1.0).unwrap();
        assert_eq!(f, vec![1.0, 1.0, -1.0, -1.0]);
        assert!(build_source(&c, Regime::Critical, 3, 1.0).is_err());
        let total: f64 = f.iter().sum();
        assert_eq!(total, 0.0);
    }

    #[test]
    fn half_line_supercritical_entry_matches_the_window_scaling() {
        let mut c = config(Family::Laguerre, 1, 1, 1);
        c.b = 2.0;
        c.t = Some(1.0);
        c.sigma = vec![0.7];
        let f = build_source(&c, Regime::Supercritical, 3, 1.0).unwrap();
        // b t sigma / ((b - t) N) then the bulk copies beta b / 2 = b.
        assert!((f[0] - 2.0 * 1.0 * 0.7 / (1.0 * 3.0)).abs() < 1e-15);
        assert_eq!(&f[1..], &[2.0, 2.0]);
    }

    #[test]
    fn critical_window_entries_shrink_with_matrix_size() {
        let c = config(Family::Gaussian, 1, 1, 1);
        let f16 = designated_entries(&c, Regime::Critical, 16, 1.0).unwrap();
        let f256 = designated_entries(&c, Regime::Critical, 256, 1.0).unwrap();
        assert!((f16[0] / f256[0] - 2.0).abs() < 1e-12);
    }
}
