//! Shared integration machinery for the limit families.
//!
//! - `ordered_quad` maps a permutation-symmetric n-dimensional integral to
//!   the ordered sector in gap coordinates (n <= 3) and multiplies back by
//!   n!, so the interaction factor stays smooth along each axis.
//! - `importance_mc` estimates the same integral over the full space from
//!   iid per-coordinate proposals, with one deterministic stream per path so
//!   results are reproducible for a fixed seed.

use num_complex::Complex64;
use numeric::{integrate, integrate2, integrate3, ComplexMoments, QuadOptions, QuadResult};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) const LOG_TRUNCATION: f64 = 42.0; // weight below exp(-42) ~ 1e-18 of peak is dropped

/// Tracks whether any kernel-series evaluation failed to converge at a node
/// whose weight actually contributes.
#[derive(Default)]
pub(crate) struct SeriesHealth {
    pub failed: bool,
}

pub(crate) fn check_series(health: &mut SeriesHealth, converged: bool, weight: f64) {
    if !converged && weight > 1e-14 {
        health.failed = true;
    }
}

/// Integrates `prod_j weight(x_j) factor(x_j) * gaps^dexp * kernel(x)` over
/// the ordered sector `lo < x_1 < ... < x_n < radius` in gap coordinates,
/// times n!.
///
/// # Arguments
/// - `kernel` receives the full coordinate vector and the combined weight at
///   the node (for convergence-health triage).
pub(crate) fn ordered_quad(
    n: usize,
    lo: f64,
    radius: f64,
    dexp: f64,
    coord_hints: &[f64],
    gap_hints: &[f64],
    weight: &dyn Fn(f64) -> f64,
    factor: &dyn Fn(f64) -> Complex64,
    kernel: &mut dyn FnMut(&[f64], f64) -> Complex64,
    opts: &QuadOptions,
) -> QuadResult {
    let span = radius - lo;
    match n {
        1 => integrate(
            |x| {
                let w = weight(x);
                w * factor(x) * kernel(&[x], w)
            },
            lo,
            radius,
            coord_hints,
            opts,
        ),
        2 => {
            let mut q = integrate2(
                |u, v| {
                    let x1 = u + v;
                    if x1 > radius {
                        return Complex64::new(0.0, 0.0);
                    }
                    let w = weight(u) * weight(x1) * v.powf(dexp);
                    w * factor(u) * factor(x1) * kernel(&[u, x1], w)
                },
                (lo, radius),
                (0.0, span),
                coord_hints,
                gap_hints,
                opts,
            );
            q.value *= 2.0;
            q.est_error *= 2.0;
            q
        }
        3 => {
            let mut all: Vec<f64> = coord_hints.iter().chain(gap_hints).copied().collect();
            all.sort_by(|p, q| p.partial_cmp(q).unwrap());
            all.dedup();
            let mut q = integrate3(
                |u, v, w| {
                    let x1 = u + v;
                    let x2 = u + v + w;
                    if x2 > radius {
                        return Complex64::new(0.0, 0.0);
                    }
                    let wt = weight(u) * weight(x1) * weight(x2) * (v * w * (v + w)).powf(dexp);
                    wt * factor(u) * factor(x1) * factor(x2) * kernel(&[u, x1, x2], wt)
                },
                (lo, radius),
                (0.0, span),
                (0.0, span),
                &all,
                opts,
            );
            q.value *= 6.0;
            q.est_error *= 6.0;
            q
        }
        _ => unreachable!("quadrature route is only built for n <= 3"),
    }
}

/// Monte Carlo mean of `|Delta(x)|^dexp * rest(x)` under iid per-coordinate
/// draws from the proposal, with one ChaCha stream per path.
///
/// # Returns
/// The sample mean and its standard error; the caller rescales both by the
/// proposal normalization.
pub(crate) fn importance_mc(
    n: usize,
    dexp: f64,
    samples: usize,
    seed: u64,
    draw: &dyn Fn(&mut ChaCha8Rng) -> f64,
    rest: &mut dyn FnMut(&[f64]) -> Complex64,
) -> (Complex64, f64) {
    let mut acc = ComplexMoments::new();
    let mut xs = vec![0.0; n];
    for path in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(path as u64);
        for x in xs.iter_mut() {
            *x = draw(&mut rng);
        }
        let mut delta = 1.0;
        for j in 1..n {
            for k in 0..j {
                delta *= (xs[j] - xs[k]).abs();
            }
        }
        acc.push(delta.powf(dexp) * rest(&xs));
    }
    (acc.mean(), acc.stderr())
}
