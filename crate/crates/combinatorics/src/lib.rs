//! Partition combinatorics and Jack symmetric polynomials.
//!
//! - [`partition`]: integer partitions, descending-lexicographic
//!   enumeration, conjugation, dominance order, and monomial symmetric
//!   function evaluation.
//! - [`hooks`]: deformed hook products and partition-indexed Pochhammer
//!   symbols.
//! - [`jack`]: Jack polynomials in the monic monomial normalization via a
//!   cached triangular solve (exact rational arithmetic for rational
//!   `alpha`), complex-point evaluation, and an operator residual
//!   diagnostic.

pub mod error;
pub mod hooks;
pub mod jack;
pub mod partition;

pub use error::CombinatoricsError;
pub use hooks::{deformed_pochhammer, hook_norm};
pub use jack::{
    eigen_residual, jack_eigenvalue, jack_eval, jack_eval_ones, jack_polynomial, JackParams,
    JackPolynomial,
};
pub use partition::{
    dominance_leq, enumerate_partitions, monomial_eval, monomial_eval_ones, Partition,
};
