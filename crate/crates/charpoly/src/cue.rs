//! Moments of `|det(I - U)|` over the unitary group.
//!
//! The `2k`-th absolute moment over `N x N` Haar-unitary matrices is the
//! finite product `prod_{j=1}^N Gamma(j) Gamma(j+2k) / Gamma(j+k)^2`. For
//! integer `k` every factor is a ratio of rising factorials, so the product
//! is evaluated in exact integer arithmetic and rounded once at the end.

use crate::error::CharPolyError;
use crate::types::MCEstimate;
use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use numeric::ComplexMoments;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `x (x+1) ... (x+len-1)` as an exact integer.
fn rising(x: u64, len: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..len {
        acc *= BigUint::from(x + i);
    }
    acc
}

/// Exact `2k`-th absolute moment of `det(I - U)` over Haar measure on the
/// `n_dim x n_dim` unitary group, rounded to `f64` once.
///
/// # Edge cases
/// `k = 0` gives 1 exactly; `k = 1` gives `n_dim + 1` exactly.
pub fn cue_moment(n_dim: usize, k: usize) -> Result<f64, CharPolyError> {
    if n_dim == 0 {
        return Err(CharPolyError::Domain("dimension must be at least 1".into()));
    }
    let k = k as u64;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 1..=n_dim as u64 {
        // Gamma(j+2k)/Gamma(j+k) over Gamma(j+k)/Gamma(j).
        num *= rising(j + k, k);
        den *= rising(j, k);
    }
    Ratio::new(num, den)
        .to_f64()
        .ok_or_else(|| CharPolyError::Numerical("moment exceeds f64 range".into()))
}

/// Barnes G at a positive integer: `G(m) = prod_{j=1}^{m-2} j!`, with
/// `G(1) = G(2) = 1`.
pub fn barnes_g(m: usize) -> Result<f64, CharPolyError> {
    if m == 0 {
        return Err(CharPolyError::Domain("Barnes G vanishes at 0; need m >= 1".into()));
    }
    let mut acc = BigUint::one();
    let mut factorial = BigUint::one();
    for j in 1..m.saturating_sub(1) {
        factorial *= BigUint::from(j);
        acc *= &factorial;
    }
    acc.to_f64().ok_or_else(|| CharPolyError::Numerical("Barnes G exceeds f64 range".into()))
}

/// Monte Carlo estimate of the same moment from Haar samples.
///
/// # Returns
/// Mean and standard error of `|det(I - U)|^{2k}`; path `i` uses stream `i`
/// of `seed`, so the estimate is independent of scheduling.
pub fn cue_moment_mc(
    n_dim: usize,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<MCEstimate, CharPolyError> {
    if n_dim == 0 {
        return Err(CharPolyError::Domain("dimension must be at least 1".into()));
    }
    if samples < 2 {
        return Err(CharPolyError::Domain("need at least 2 samples".into()));
    }
    let mut acc = ComplexMoments::new();
    for i in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let u = hyperfun::haar_unitary(n_dim, &mut rng);
        let m = DMatrix::<Complex64>::identity(n_dim, n_dim) - u;
        let z = m.determinant();
        acc.push(Complex64::new(z.norm().powi(2 * k as i32), 0.0));
    }
    Ok(MCEstimate { mean: acc.mean(), stderr: acc.stderr(), samples, seed })
}
