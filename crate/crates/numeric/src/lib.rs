//! Shared numerical kernels used across the workspace:
//!
//! - [`logc`]: complex numbers in log form (log-magnitude + phase), for
//!   prefactors and integrals whose magnitudes overflow `f64`.
//! - [`kahan`]: compensated (Kahan) summation for real and complex values.
//! - [`stats`]: streaming mean / standard-error accumulators for Monte Carlo.
//! - [`quad`]: adaptive Gauss-Kronrod 15(7) quadrature for complex-valued
//!   integrands on finite intervals, with iterated 2- and 3-dimensional
//!   drivers and decay-radius estimation for weight truncation.

pub mod kahan;
pub mod logc;
pub mod quad;
pub mod stats;

pub use kahan::{KahanComplex, KahanSum};
pub use logc::LogComplex;
pub use quad::{decay_radius, integrate, integrate2, integrate3, QuadOptions, QuadResult};
pub use stats::ComplexMoments;
