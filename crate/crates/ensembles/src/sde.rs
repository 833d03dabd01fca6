//! Eigenvalue SDE integrators.
//!
//! Gaussian interacting diffusion:
//! `dx_i = dB_i + (beta/2) sum_{j != i} dt / (x_i - x_j)`.
//!
//! Laguerre interacting diffusion (squared singular values):
//! `dx_i = 2 sqrt(x_i) dB_i + beta (p + sum_{j != i} (x_i + x_j)/(x_i - x_j)) dt`.
//!
//! A macro step that breaks the strict ordering (or positivity for the
//! Laguerre family) is retried as two half steps with fresh noise, up to 40
//! halvings; the Laguerre clock runs at half the ensemble time, so matching
//! a static `EnsembleSpec` means integrating to [`ensemble_horizon`].

use crate::error::EnsemblesError;
use crate::types::{EigenSample, EnsembleSpec, Family, Scheme, SdeConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

const MAX_HALVINGS: u32 = 40;

/// Process time at which the SDE law coincides with the static ensemble
/// `spec`: `t` for Gaussian, `t/2` for Laguerre (whose generator carries a
/// factor two relative to the density's time convention).
pub fn ensemble_horizon(spec: &EnsembleSpec) -> f64 {
    match spec.family {
        Family::GaussianSource => spec.t,
        Family::LaguerreSource => spec.t / 2.0,
    }
}

struct Dynamics {
    family: Family,
    beta: f64,
    /// Rectangle dimension for the Laguerre drift (unused for Gaussian).
    p: f64,
}

impl Dynamics {
    fn drift(&self, x: &[f64], out: &mut [f64]) {
        let n = x.len();
        match self.family {
            Family::GaussianSource => {
                for i in 0..n {
                    let mut s = 0.0;
                    for j in 0..n {
                        if j != i {
                            s += 1.0 / (x[i] - x[j]);
                        }
                    }
                    out[i] = 0.5 * self.beta * s;
                }
            }
            Family::LaguerreSource => {
                for i in 0..n {
                    let mut s = self.p;
                    for j in 0..n {
                        if j != i {
                            s += (x[i] + x[j]) / (x[i] - x[j]);
                        }
                    }
                    out[i] = self.beta * s;
                }
            }
        }
    }

    fn diffusion(&self, xi: f64) -> f64 {
        match self.family {
            Family::GaussianSource => 1.0,
            Family::LaguerreSource => 2.0 * xi.max(0.0).sqrt(),
        }
    }

    fn valid(&self, x: &[f64], floor: f64) -> bool {
        if x.iter().any(|v| !v.is_finite()) {
            return false;
        }
        if x.windows(2).any(|w| w[1] - w[0] < floor) {
            return false;
        }
        match self.family {
            Family::GaussianSource => true,
            Family::LaguerreSource => x[0] > floor,
        }
    }
}

fn propose<R: Rng + ?Sized>(
    x: &[f64],
    h: f64,
    dyn_: &Dynamics,
    scheme: Scheme,
    rng: &mut R,
) -> Vec<f64> {
    let n = x.len();
    let mut drift = vec![0.0; n];
    dyn_.drift(x, &mut drift);
    let damp = match scheme {
        Scheme::EulerMaruyama => 1.0,
        Scheme::TamedEuler => {
            let norm = drift.iter().map(|d| d * d).sum::<f64>().sqrt();
            1.0 / (1.0 + h * norm)
        }
    };
    let sqrt_h = h.sqrt();
    (0..n)
        .map(|i| {
            let g: f64 = StandardNormal.sample(rng);
            x[i] + drift[i] * h * damp + dyn_.diffusion(x[i]) * sqrt_h * g
        })
        .collect()
}

fn advance<R: Rng + ?Sized>(
    x: &mut Vec<f64>,
    h: f64,
    depth: u32,
    dyn_: &Dynamics,
    config: &SdeConfig,
    rng: &mut R,
) -> Result<(), EnsemblesError> {
    let prop = propose(x, h, dyn_, config.scheme, rng);
    if dyn_.valid(&prop, config.collision_floor) {
        *x = prop;
        return Ok(());
    }
    if depth >= MAX_HALVINGS {
        return Err(EnsemblesError::Numerical(format!(
            "step size {h:.3e} still violates ordering after {MAX_HALVINGS} halvings"
        )));
    }
    advance(x, h / 2.0, depth + 1, dyn_, config, rng)?;
    advance(x, h / 2.0, depth + 1, dyn_, config, rng)
}

/// Integrate one path of the eigenvalue SDE from the sorted source `spec.f`
/// to `config.t_final` (process time), using the supplied generator.
pub fn sample_sde_with<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    config: &SdeConfig,
    rng: &mut R,
) -> Result<EigenSample, EnsemblesError> {
    spec.validate()?;
    config.validate()?;
    let dyn_ = Dynamics {
        family: spec.family,
        beta: spec.beta,
        p: spec.p_value().unwrap_or(0.0),
    };

    let mut x = spec.f.clone();
    x.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    // Split coinciding starting points; the drift is singular on the
    // diagonal, so nudge by a spread proportional to the horizon.
    let eps = 1e-8 * spec.t;
    let needs_spread = x.windows(2).any(|w| w[1] - w[0] <= config.collision_floor)
        || (spec.family == Family::LaguerreSource && x[0] <= config.collision_floor);
    if needs_spread {
        for (i, v) in x.iter_mut().enumerate() {
            *v += (i + 1) as f64 * eps;
        }
        if spec.family == Family::LaguerreSource {
            let shift = config.collision_floor;
            for v in x.iter_mut() {
                *v += shift + eps;
            }
        }
    }

    let steps = (config.t_final / config.dt).ceil().max(1.0) as usize;
    let mut remaining = config.t_final;
    for _ in 0..steps {
        let h = config.dt.min(remaining);
        if h <= 0.0 {
            break;
        }
        advance(&mut x, h, 0, &dyn_, config, rng)?;
        remaining -= h;
    }
    Ok(EigenSample::new(x))
}

/// Integrate one path using a generator seeded from `config.seed`.
pub fn sample_sde(spec: &EnsembleSpec, config: &SdeConfig) -> Result<EigenSample, EnsemblesError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    sample_sde_with(spec, config, &mut rng)
}
