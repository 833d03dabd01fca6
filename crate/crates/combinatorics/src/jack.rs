//! Jack symmetric polynomials in the monic monomial normalization.
//!
//! `P_kappa = m_kappa + sum_{mu} c_{kappa,mu} m_mu`, with `mu` running over
//! partitions strictly below `kappa` in dominance order. The coefficients
//! are fixed by requiring `P_kappa` to be an eigenfunction of
//!
//! ```text
//! O = sum_i x_i^2 d_i^2
//!   + (2/alpha) sum_{i != j} x_i^2 / (x_i - x_j) d_i
//!   - (2/alpha) (n-1) sum_i x_i d_i
//! ```
//!
//! whose action on the monomial basis is triangular with respect to
//! dominance. The eigenvalue
//! `eps_kappa = sum_i kappa_i (kappa_i - 1) - (2/alpha) sum_i (i-1) kappa_i`
//! and the coefficients do not depend on the variable count, so the solve
//! runs in `min(nvars, |kappa|)` variables and results are cached.
//!
//! When `alpha` is recognizably rational (denominator at most 64) and the
//! weight is at most 20, the triangular solve runs in exact big-rational
//! arithmetic and is rounded once at the end; otherwise it runs in `f64`.

use crate::error::CombinatoricsError;
use crate::partition::{
    dominance_leq, enumerate_partitions, monomial_eval, monomial_eval_ones, next_permutation,
    Partition,
};
use dashmap::DashMap;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

const EXACT_WEIGHT_LIMIT: usize = 20;
const EXACT_DENOM_LIMIT: u64 = 64;

/// Deformation parameter and variable count for a Jack polynomial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JackParams {
    pub alpha: f64,
    pub nvars: usize,
}

impl JackParams {
    pub fn new(alpha: f64, nvars: usize) -> Result<Self, CombinatoricsError> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(CombinatoricsError::Domain(format!(
                "alpha must be finite and positive, got {alpha}"
            )));
        }
        if nvars == 0 {
            return Err(CombinatoricsError::Domain("nvars must be at least 1".into()));
        }
        Ok(JackParams { alpha, nvars })
    }
}

/// A solved Jack polynomial: its monomial coefficients and eigenvalue.
#[derive(Clone, Debug)]
pub struct JackPolynomial {
    pub kappa: Partition,
    pub alpha: f64,
    pub nvars: usize,
    /// Coefficient of `m_mu`; the leading key `kappa` maps to exactly 1.
    pub coeffs: BTreeMap<Partition, f64>,
    pub eigenvalue: f64,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum AlphaKey {
    Rational(u64, u64),
    Bits(u64),
}

type CacheKey = (Vec<usize>, AlphaKey, usize);

static JACK_CACHE: Lazy<DashMap<CacheKey, Arc<JackPolynomial>>> = Lazy::new(DashMap::new);

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Recognize `alpha` as `p/q` with `q <= 64`, within 1e-12 relative.
fn rational_of(alpha: f64) -> Option<(u64, u64)> {
    for q in 1..=EXACT_DENOM_LIMIT {
        let pf = (alpha * q as f64).round();
        if pf < 1.0 || pf > 1e15 {
            continue;
        }
        let p = pf as u64;
        if (p as f64 / q as f64 - alpha).abs() <= 1e-12 * alpha.max(1.0) {
            let g = gcd(p, q);
            return Some((p / g, q / g));
        }
    }
    None
}

fn alpha_key(alpha: f64) -> AlphaKey {
    match rational_of(alpha) {
        Some((p, q)) => AlphaKey::Rational(p, q),
        None => AlphaKey::Bits(alpha.to_bits()),
    }
}

/// `eps_kappa` for the operator above; independent of the variable count.
pub fn jack_eigenvalue(kappa: &Partition, alpha: f64) -> f64 {
    let quad: f64 = kappa.parts().iter().map(|&k| (k * (k - 1).max(0)) as f64).sum();
    let lin: f64 = kappa.parts().iter().enumerate().map(|(i, &k)| (i * k) as f64).sum();
    quad - 2.0 / alpha * lin
}

/// Enumerate "pinch" source vectors for the target exponent vector `v`
/// (sorted non-increasing): every way to replace a position pair
/// `(v_i, v_j)`, `i < j`, by `(a, b)` with `a + b = v_i + v_j` and
/// `a > v_i >= v_j > b >= 0`. The callback receives the modified vector and
/// the integer weight `a - b` it contributes.
fn for_each_pinch_source(v: &[usize], mut f: impl FnMut(&[usize], i64)) {
    let n = v.len();
    let mut w = v.to_vec();
    for i in 0..n {
        for j in (i + 1)..n {
            if v[j] == 0 {
                continue;
            }
            let s = v[i] + v[j];
            for a in (v[i] + 1)..=s {
                let b = s - a;
                w.copy_from_slice(v);
                w[i] = a;
                w[j] = b;
                f(&w, a as i64 - b as i64);
            }
        }
    }
}

fn solve_exact(kappa: &Partition, p: u64, q: u64, n: usize) -> BTreeMap<Partition, f64> {
    let two_over_alpha = BigRational::new(BigInt::from(2 * q), BigInt::from(p));
    let eps = |lam: &Partition| -> BigRational {
        let quad: i64 = lam.parts().iter().map(|&k| (k as i64) * (k as i64 - 1)).sum();
        let lin: i64 = lam.parts().iter().enumerate().map(|(i, &k)| (i * k) as i64).sum();
        BigRational::from_integer(BigInt::from(quad))
            - &two_over_alpha * BigRational::from_integer(BigInt::from(lin))
    };

    let all = enumerate_partitions(kappa.weight(), n);
    let pos = all.iter().position(|lam| lam == kappa).expect("kappa fits in nvars");
    let mut coeffs: HashMap<Vec<usize>, BigRational> = HashMap::new();
    coeffs.insert(kappa.parts().to_vec(), BigRational::one());
    let eps_kappa = eps(kappa);

    for mu in &all[pos + 1..] {
        if !dominance_leq(mu, kappa).expect("equal weights by construction") {
            continue;
        }
        let v = mu.padded(n);
        let mut acc = BigRational::zero();
        for_each_pinch_source(&v, |src, weight| {
            let lam = Partition::from_unsorted(src.to_vec());
            if let Some(c) = coeffs.get(lam.parts()) {
                acc += c * BigRational::from_integer(BigInt::from(weight));
            }
        });
        let c = acc * &two_over_alpha / (&eps_kappa - eps(mu));
        coeffs.insert(mu.parts().to_vec(), c);
    }

    coeffs
        .into_iter()
        .map(|(parts, c)| {
            let val = c.to_f64().expect("jack coefficient in f64 range");
            (Partition::from_unsorted(parts), val)
        })
        .collect()
}

fn solve_f64(kappa: &Partition, alpha: f64, n: usize) -> BTreeMap<Partition, f64> {
    let two_over_alpha = 2.0 / alpha;
    let eps = |lam: &Partition| jack_eigenvalue(lam, alpha);

    let all = enumerate_partitions(kappa.weight(), n);
    let pos = all.iter().position(|lam| lam == kappa).expect("kappa fits in nvars");
    let mut coeffs: HashMap<Vec<usize>, f64> = HashMap::new();
    coeffs.insert(kappa.parts().to_vec(), 1.0);
    let eps_kappa = eps(kappa);

    for mu in &all[pos + 1..] {
        if !dominance_leq(mu, kappa).expect("equal weights by construction") {
            continue;
        }
        let v = mu.padded(n);
        let mut acc = 0.0;
        for_each_pinch_source(&v, |src, weight| {
            let lam = Partition::from_unsorted(src.to_vec());
            if let Some(c) = coeffs.get(lam.parts()) {
                acc += c * weight as f64;
            }
        });
        let c = acc * two_over_alpha / (eps_kappa - eps(mu));
        coeffs.insert(mu.parts().to_vec(), c);
    }

    coeffs.into_iter().map(|(parts, c)| (Partition::from_unsorted(parts), c)).collect()
}

/// Compute (or fetch from the cache) the Jack polynomial `P_kappa` for the
/// given parameters.
///
/// # Edge cases
/// A partition with more parts than `nvars` is a domain error: the
/// polynomial is identically zero in that many variables and callers must
/// filter such terms themselves rather than receive a silent zero.
pub fn jack_polynomial(
    kappa: &Partition,
    params: &JackParams,
) -> Result<Arc<JackPolynomial>, CombinatoricsError> {
    JackParams::new(params.alpha, params.nvars)?;
    if kappa.length() > params.nvars {
        return Err(CombinatoricsError::Domain(format!(
            "partition {kappa} has {} parts but only {} variables",
            kappa.length(),
            params.nvars
        )));
    }

    let key: CacheKey = (kappa.parts().to_vec(), alpha_key(params.alpha), params.nvars);
    if let Some(hit) = JACK_CACHE.get(&key) {
        return Ok(hit.clone());
    }

    let n_solve = params.nvars.min(kappa.weight()).max(1);
    let coeffs = match rational_of(params.alpha) {
        Some((p, q)) if kappa.weight() <= EXACT_WEIGHT_LIMIT => {
            solve_exact(kappa, p, q, n_solve)
        }
        _ => solve_f64(kappa, params.alpha, n_solve),
    };

    let poly = Arc::new(JackPolynomial {
        kappa: kappa.clone(),
        alpha: params.alpha,
        nvars: params.nvars,
        eigenvalue: jack_eigenvalue(kappa, params.alpha),
        coeffs,
    });
    JACK_CACHE.insert(key, poly.clone());
    Ok(poly)
}

/// Evaluate `P_kappa` at a complex point with exactly `poly.nvars`
/// coordinates.
pub fn jack_eval(poly: &JackPolynomial, xs: &[Complex64]) -> Result<Complex64, CombinatoricsError> {
    if xs.len() != poly.nvars {
        return Err(CombinatoricsError::Domain(format!(
            "expected {} coordinates, got {}",
            poly.nvars,
            xs.len()
        )));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for (mu, &c) in &poly.coeffs {
        if mu.length() > xs.len() {
            continue;
        }
        sum += monomial_eval(mu, xs) * c;
    }
    Ok(sum)
}

/// Evaluate `P_kappa` at the all-ones point `(1, ..., 1)` with `poly.nvars`
/// coordinates, by counting distinct monomial arrangements. Positive for
/// every partition that fits in the variable count.
pub fn jack_eval_ones(poly: &JackPolynomial) -> f64 {
    poly.coeffs
        .iter()
        .map(|(mu, &c)| c * monomial_eval_ones(mu, poly.nvars))
        .sum()
}

/// Apply the defining operator to `P_kappa` at a single point and return the
/// scaled eigen-equation residual `|O P(x) - eps P(x)| / max(1, |P(x)|)`.
///
/// Works directly from the coefficient table via term-by-term
/// differentiation of the monomial expansion, so it checks the solved
/// coefficients independently of how they were produced. Coordinates must
/// be pairwise distinct.
pub fn eigen_residual(
    poly: &JackPolynomial,
    xs: &[Complex64],
) -> Result<f64, CombinatoricsError> {
    let n = poly.nvars;
    if xs.len() != n {
        return Err(CombinatoricsError::Domain(format!(
            "expected {} coordinates, got {}",
            n,
            xs.len()
        )));
    }
    let scale = xs.iter().map(|x| x.norm()).fold(1.0f64, f64::max);
    for i in 0..n {
        for j in (i + 1)..n {
            if (xs[i] - xs[j]).norm() < 1e-9 * scale {
                return Err(CombinatoricsError::Domain(
                    "operator residual needs pairwise distinct coordinates".into(),
                ));
            }
        }
    }

    let zero = Complex64::new(0.0, 0.0);
    let mut value = zero;
    let mut grad = vec![zero; n];
    let mut hess_diag = vec![zero; n];

    let mut factors = vec![Complex64::new(1.0, 0.0); n];
    let mut prefix = vec![Complex64::new(1.0, 0.0); n + 1];
    let mut suffix = vec![Complex64::new(1.0, 0.0); n + 1];

    for (mu, &c) in &poly.coeffs {
        if mu.length() > n {
            continue;
        }
        let mut v = mu.padded(n);
        v.reverse();
        loop {
            for i in 0..n {
                factors[i] = xs[i].powu(v[i] as u32);
            }
            prefix[0] = Complex64::new(1.0, 0.0);
            for i in 0..n {
                prefix[i + 1] = prefix[i] * factors[i];
            }
            suffix[n] = Complex64::new(1.0, 0.0);
            for i in (0..n).rev() {
                suffix[i] = suffix[i + 1] * factors[i];
            }
            value += prefix[n] * c;
            for i in 0..n {
                let e = v[i];
                if e == 0 {
                    continue;
                }
                let rest = prefix[i] * suffix[i + 1];
                grad[i] += rest * xs[i].powu(e as u32 - 1) * (c * e as f64);
                if e >= 2 {
                    hess_diag[i] +=
                        rest * xs[i].powu(e as u32 - 2) * (c * (e * (e - 1)) as f64);
                }
            }
            if !next_permutation(&mut v) {
                break;
            }
        }
    }

    let two_over_alpha = 2.0 / poly.alpha;
    let mut op = zero;
    for i in 0..n {
        op += xs[i] * xs[i] * hess_diag[i];
        op -= xs[i] * grad[i] * (two_over_alpha * (n as f64 - 1.0));
        for j in 0..n {
            if j != i {
                op += xs[i] * xs[i] / (xs[i] - xs[j]) * grad[i] * two_over_alpha;
            }
        }
    }

    let resid = (op - value * poly.eigenvalue).norm();
    Ok(resid / value.norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn row_two_coefficients() {
        for &alpha in &[0.5, 1.0, 2.0, 2.0 / 3.0] {
            let poly = jack_polynomial(&p(&[2]), &JackParams::new(alpha, 2).unwrap()).unwrap();
            assert_eq!(poly.coeffs[&p(&[2])], 1.0);
            assert_relative_eq!(
                poly.coeffs[&p(&[1, 1])],
                2.0 / (1.0 + alpha),
                max_relative = 1e-14
            );
            assert_eq!(poly.coeffs.len(), 2);
        }
    }

    #[test]
    fn schur_case_at_ones() {
        // alpha = 1: P_(2) = m_2 + m_11, so P(1,1) = 2 + 1 = 3.
        let poly = jack_polynomial(&p(&[2]), &JackParams::new(1.0, 2).unwrap()).unwrap();
        let ones = [Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        let val = jack_eval(&poly, &ones).unwrap();
        assert_relative_eq!(val.re, 3.0, max_relative = 1e-14);
        assert_relative_eq!(jack_eval_ones(&poly), 3.0, max_relative = 1e-14);
    }

    #[test]
    fn too_many_parts_is_domain_error() {
        let err = jack_polynomial(&p(&[1, 1, 1]), &JackParams::new(1.0, 2).unwrap());
        assert!(err.is_err());
    }

    #[test]
    fn triangular_support() {
        let kappa = p(&[3, 1]);
        let poly = jack_polynomial(&kappa, &JackParams::new(0.5, 4).unwrap()).unwrap();
        for mu in poly.coeffs.keys() {
            assert!(dominance_leq(mu, &kappa).unwrap());
        }
        assert_eq!(poly.coeffs[&kappa], 1.0);
    }

    #[test]
    fn eigenvalue_formula() {
        // (3,1): quad = 6 + 0, lin = 0*3 + 1*1 = 1.
        assert_relative_eq!(jack_eigenvalue(&p(&[3, 1]), 2.0), 6.0 - 1.0, max_relative = 1e-15);
    }

    #[test]
    fn exact_and_float_paths_agree() {
        let kappa = p(&[3, 2, 1]);
        let exact = jack_polynomial(&kappa, &JackParams::new(0.5, 3).unwrap()).unwrap();
        let float = solve_f64(&kappa, 0.5, 3);
        for (mu, c) in &exact.coeffs {
            assert_relative_eq!(*c, float[mu], max_relative = 1e-12);
        }
    }

    #[test]
    fn residual_small_on_sample() {
        let poly = jack_polynomial(&p(&[2, 2]), &JackParams::new(0.5, 3).unwrap()).unwrap();
        let xs = [
            Complex64::new(0.3, 0.4),
            Complex64::new(-0.7, 0.1),
            Complex64::new(0.2, -0.9),
        ];
        assert!(eigen_residual(&poly, &xs).unwrap() < 1e-12);
    }
}
