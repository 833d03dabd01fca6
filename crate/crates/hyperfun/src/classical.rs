//! Classical scalar hypergeometric functions used as single-variable
//! reductions and oracles for the Jack series.

use num_complex::Complex64;
use numeric::KahanComplex;

const MAX_TERMS: usize = 400;
const TERM_TOL: f64 = 1e-18;

/// `0F1(b; z)` by direct term recurrence.
pub fn classical_0f1(b: f64, z: Complex64) -> Complex64 {
    let mut sum = KahanComplex::new();
    let mut term = Complex64::new(1.0, 0.0);
    sum.add(term);
    for k in 0..MAX_TERMS {
        term *= z / ((b + k as f64) * (k as f64 + 1.0));
        sum.add(term);
        if term.norm() < TERM_TOL * sum.value().norm().max(1.0) {
            break;
        }
    }
    sum.value()
}

/// `1F1(a; b; z)` (Kummer) by direct term recurrence.
pub fn classical_1f1(a: f64, b: f64, z: Complex64) -> Complex64 {
    let mut sum = KahanComplex::new();
    let mut term = Complex64::new(1.0, 0.0);
    sum.add(term);
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= z * (a + kf) / ((b + kf) * (kf + 1.0));
        sum.add(term);
        if term.norm() < TERM_TOL * sum.value().norm().max(1.0) {
            break;
        }
    }
    sum.value()
}

/// `1F0(a; z) = (1 - z)^{-a}` in closed form (principal branch).
pub fn classical_1f0(a: f64, z: Complex64) -> Complex64 {
    (Complex64::new(1.0, 0.0) - z).powf(-a)
}
