//! Complex values stored as `exp(log_abs) * exp(i * arg)`.
//!
//! Normalization prefactors like `(N/t)^{n/2 + n(n-1)/beta} e^{c N}` overflow
//! `f64` well before N = 256, so every such factor is assembled in log form
//! and only the final O(1) ratio is exponentiated.

use num_complex::Complex64;

/// A complex number in polar-log representation: `exp(log_abs + i*arg)`.
///
/// `log_abs = -inf` encodes zero. The phase is kept unreduced; callers that
/// build phases from quarter-turn powers keep them exact to one rounding of
/// `k * FRAC_PI_2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogComplex {
    pub log_abs: f64,
    pub arg: f64,
}

impl LogComplex {
    pub const ONE: LogComplex = LogComplex { log_abs: 0.0, arg: 0.0 };

    pub fn zero() -> Self {
        LogComplex { log_abs: f64::NEG_INFINITY, arg: 0.0 }
    }

    pub fn is_zero(&self) -> bool {
        self.log_abs == f64::NEG_INFINITY
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z == Complex64::new(0.0, 0.0) {
            return Self::zero();
        }
        LogComplex { log_abs: z.norm().ln(), arg: z.arg() }
    }

    /// A positive real `exp(log_abs)` given directly in log form.
    pub fn from_log_abs(log_abs: f64) -> Self {
        LogComplex { log_abs, arg: 0.0 }
    }

    /// `exp(z)` for complex `z`, never materializing the magnitude.
    pub fn from_exp(z: Complex64) -> Self {
        LogComplex { log_abs: z.re, arg: z.im }
    }

    /// `x^p` for real `x` (either sign) and real power `p` over the principal
    /// branch: negative `x` contributes phase `p * pi`.
    pub fn real_powf(x: f64, p: f64) -> Self {
        if x == 0.0 {
            if p == 0.0 {
                return Self::ONE;
            }
            return Self::zero();
        }
        let arg = if x < 0.0 { p * std::f64::consts::PI } else { 0.0 };
        LogComplex { log_abs: p * x.abs().ln(), arg }
    }

    /// `z^p` for complex `z` on the principal branch.
    pub fn complex_powf(z: Complex64, p: f64) -> Self {
        if z == Complex64::new(0.0, 0.0) {
            if p == 0.0 {
                return Self::ONE;
            }
            return Self::zero();
        }
        LogComplex { log_abs: p * z.norm().ln(), arg: p * z.arg() }
    }

    /// `(-i)^k` with the phase tracked as an exact multiple of pi/2.
    pub fn neg_i_pow(k: i64) -> Self {
        LogComplex { log_abs: 0.0, arg: -(k as f64) * std::f64::consts::FRAC_PI_2 }
    }

    /// `(-1)^k`.
    pub fn neg_one_pow(k: i64) -> Self {
        LogComplex { log_abs: 0.0, arg: (k as f64) * std::f64::consts::PI }
    }

    pub fn mul(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        LogComplex { log_abs: self.log_abs + other.log_abs, arg: self.arg + other.arg }
    }

    pub fn div(self, other: Self) -> Self {
        LogComplex { log_abs: self.log_abs - other.log_abs, arg: self.arg - other.arg }
    }

    pub fn recip(self) -> Self {
        LogComplex { log_abs: -self.log_abs, arg: -self.arg }
    }

    pub fn powi(self, k: i64) -> Self {
        LogComplex { log_abs: self.log_abs * k as f64, arg: self.arg * k as f64 }
    }

    /// Exponentiate back to a `Complex64`; overflows to infinity if the
    /// magnitude exceeds `f64`.
    pub fn to_complex(self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let r = self.log_abs.exp();
        Complex64::new(r * self.arg.cos(), r * self.arg.sin())
    }
}

impl std::ops::Mul for LogComplex {
    type Output = LogComplex;
    fn mul(self, rhs: LogComplex) -> LogComplex {
        LogComplex::mul(self, rhs)
    }
}

impl std::ops::Div for LogComplex {
    type Output = LogComplex;
    fn div(self, rhs: LogComplex) -> LogComplex {
        LogComplex::div(self, rhs)
    }
}
