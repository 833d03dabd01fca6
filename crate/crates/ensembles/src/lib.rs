//! Sourced Gaussian and Laguerre beta-ensembles.
//!
//! - [`types`]: ensemble parameters ([`EnsembleSpec`]), SDE configuration
//!   ([`SdeConfig`]), and the [`EigenSample`] record.
//! - [`norms`]: normalization constants in plain and log form.
//! - [`density`]: joint eigenvalue densities over the unordered space.
//! - [`matrix`]: direct matrix-model samplers for `beta` in {1, 2}.
//! - [`sde`]: interacting eigenvalue diffusions for any `beta > 0`, with
//!   adaptive step halving near collisions.

pub mod density;
pub mod error;
pub mod matrix;
pub mod norms;
pub mod sde;
pub mod types;

pub use density::density;
pub use error::EnsemblesError;
pub use matrix::sample_matrix_model;
pub use norms::{gaussian_log_norm, gaussian_norm, laguerre_log_norm, laguerre_norm};
pub use sde::{ensemble_horizon, sample_sde, sample_sde_with};
pub use types::{EigenSample, EnsembleSpec, Family, Scheme, SdeConfig};
