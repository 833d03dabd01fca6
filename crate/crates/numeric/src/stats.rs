//! Streaming first and second moments for complex-valued Monte Carlo output.

use num_complex::Complex64;

/// Welford-style accumulator for a stream of complex samples.
///
/// The spread is tracked as the total variance `E|Z - EZ|^2` (real part plus
/// imaginary part), so `stderr` bounds the Euclidean error of the complex
/// mean.
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexMoments {
    count: u64,
    mean: Complex64,
    m2: f64,
}

impl ComplexMoments {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, z: Complex64) {
        self.count += 1;
        let delta = z - self.mean;
        self.mean += delta / self.count as f64;
        let delta2 = z - self.mean;
        self.m2 += delta.re * delta2.re + delta.im * delta2.im;
    }

    /// Merge another accumulator (parallel reduction), exact in the same
    /// sense as sequential Welford.
    pub fn merge(&mut self, other: &ComplexMoments) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let n1 = self.count as f64;
        let n2 = other.count as f64;
        let delta = other.mean - self.mean;
        let total = n1 + n2;
        self.mean += delta * (n2 / total);
        self.m2 += other.m2 + delta.norm_sqr() * n1 * n2 / total;
        self.count += other.count;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> Complex64 {
        self.mean
    }

    /// Sample variance `E|Z - EZ|^2` with the n-1 correction.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        self.m2 / (self.count as f64 - 1.0)
    }

    /// Standard error of the complex mean.
    pub fn stderr(&self) -> f64 {
        if self.count < 2 {
            return f64::INFINITY;
        }
        (self.variance() / self.count as f64).sqrt()
    }
}
