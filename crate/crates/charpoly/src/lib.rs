//! Averages of products of characteristic polynomials over sourced
//! beta-ensembles, computed three independent ways.
//!
//! - [`mc_charpoly_avg`]: direct sampling of the ensemble, with log-complex
//!   path products and scheduling-independent seeding.
//! - [`exact_k_gaussian`] / [`exact_k_laguerre`]: adaptive quadrature of the
//!   dual integral representation, whose dimension is the number of
//!   polynomial factors rather than the number of eigenvalues.
//! - [`duality_check_gaussian`] / [`duality_check_laguerre`]: both sides of
//!   the argument/source swap evaluated independently.
//!
//! Unitary-group moments ([`cue_moment`], exact) and their sampling
//! counterpart ([`cue_moment_mc`]) provide an external cross-check of the
//! Haar machinery, and [`barnes_g`] covers the constants such moments
//! converge to.

mod cue;
mod duality;
mod error;
mod exact;
mod expect;
mod mc;
mod types;

pub use cue::{barnes_g, cue_moment, cue_moment_mc};
pub use duality::{duality_check_gaussian, duality_check_laguerre, DualityCheck, DualityMode};
pub use error::CharPolyError;
pub use exact::{exact_k_gaussian, exact_k_laguerre};
pub use expect::{density_complex_source, expect_quad, ComplexSourceSpec};
pub use mc::{mc_charpoly_avg, mc_charpoly_avg_with_workers};
pub use types::{CharPolyQuery, KValue, MCEstimate, Sampler};
