//! Hypergeometric functions of vector arguments via Jack polynomial series.
//!
//! - [`types`]: series parameters ([`HypergeometricSpec`]), truncation
//!   control ([`TruncationPolicy`]), and the [`SeriesValue`] result.
//! - [`series`]: one- and two-argument partition-shell series with
//!   compensated summation.
//! - [`classical`]: scalar `0F1`, `1F1`, `1F0` reductions used as oracles.
//! - [`identity`]: residual check of the balanced-argument `0F0`-to-`1F1`
//!   reduction.
//! - [`haar`]: Monte Carlo unitary-group average as an independent oracle
//!   for the two-set series at `alpha = 1`.

pub mod classical;
pub mod error;
pub mod haar;
pub mod identity;
pub mod series;
pub mod types;

pub use classical::{classical_0f1, classical_1f0, classical_1f1};
pub use error::HyperfunError;
pub use haar::{haar_mc_0f0, haar_unitary, HaarEstimate};
pub use identity::check_1f1_identity;
pub use series::{hyperg_one_set, hyperg_two_set};
pub use types::{HypergeometricSpec, SeriesValue, TruncationPolicy};
