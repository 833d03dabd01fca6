//! Scaling-window limit functions for averaged products of characteristic
//! polynomials, together with the finite-size normalizers of the three
//! transition regimes.
//!
//! The crate provides:
//!
//! - the four limit families as `n`-dimensional Selberg-type averages:
//!   [`pearcey_p`] (quartic window), [`gauss_g`] (Gaussian window),
//!   [`crit_b`] (critical wall window), [`hard_w`] (hard-wall window),
//!   plus `_z` variants at complex arguments for duality checks;
//! - the regime normalizers [`const_psi`] and [`const_phi`] in log-complex
//!   form, and the combinatorial ratio [`gamma_m`];
//! - evaluation plumbing: [`LimitSpec`]/[`LimitValue`] and an [`EvalPolicy`]
//!   selecting quadrature (`n <= 3`) or importance-sampled Monte Carlo
//!   (`n >= 4`, deterministic per seed).

mod constants;
mod engine;
mod error;
mod limits;
mod types;

pub use constants::{const_phi, const_psi, gamma_m, PhiParams, PsiParams, Regime};
pub use error::ScalingError;
pub use limits::{
    crit_b, crit_b_z, gauss_g, gauss_g_z, hard_w, hard_w_z, pearcey_p, pearcey_p_tau_deriv,
    pearcey_p_z,
};
pub use types::{EvalPolicy, LimitKind, LimitMethod, LimitSpec, LimitValue};
