//! Normalization constants of the sourced Gaussian and Laguerre densities,
//! in plain and log form.

use statrs::function::gamma::ln_gamma;

/// Log of the Gaussian-family constant:
/// `(2 pi)^{n/2} prod_{j=1}^{n} Gamma(1 + j beta/2) / Gamma(1 + beta/2)`.
pub fn gaussian_log_norm(beta: f64, n: usize) -> f64 {
    let mut log = n as f64 / 2.0 * (2.0 * std::f64::consts::PI).ln();
    for j in 1..=n {
        log += ln_gamma(1.0 + j as f64 * beta / 2.0) - ln_gamma(1.0 + beta / 2.0);
    }
    log
}

pub fn gaussian_norm(beta: f64, n: usize) -> f64 {
    gaussian_log_norm(beta, n).exp()
}

/// Log of the Laguerre-family constant:
/// `prod_{j=0}^{n-1} Gamma(1 + (1+j) beta/2) Gamma(a + j beta/2) / Gamma(1 + beta/2)`.
pub fn laguerre_log_norm(a: f64, beta: f64, n: usize) -> f64 {
    let mut log = 0.0;
    for j in 0..n {
        log += ln_gamma(1.0 + (1.0 + j as f64) * beta / 2.0) + ln_gamma(a + j as f64 * beta / 2.0)
            - ln_gamma(1.0 + beta / 2.0);
    }
    log
}

pub fn laguerre_norm(a: f64, beta: f64, n: usize) -> f64 {
    laguerre_log_norm(a, beta, n).exp()
}
