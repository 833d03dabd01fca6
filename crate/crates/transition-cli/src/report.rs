//! Regime classification: which side of the spectral transition a parameter
//! point sits on, the saddle points that control the local asymptotics, and
//! the window map taking limit coordinates to polynomial arguments.

use crate::error::TransitionError;
use num_complex::Complex64;
use scalinglimits::Regime;
use serde::{Deserialize, Serialize};

/// Which transition family an experiment runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Real-line spectrum with a two-sided bulk source `+-sqrt(beta/2) b`.
    Gaussian,
    /// Half-line spectrum with a bulk source `beta b / 2` at distance `b`
    /// from the hard wall.
    Laguerre,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gaussian => "gaussian",
            Family::Laguerre => "laguerre",
        }
    }
}

pub fn regime_name(regime: Regime) -> &'static str {
    match regime {
        Regime::Subcritical => "subcritical",
        Regime::Critical => "critical",
        Regime::Supercritical => "supercritical",
    }
}

/// The window map `s_j = v + y_j / (rho * N^n_exponent)` placing the
/// polynomial arguments inside the fluctuation window around `v`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ScalingMap {
    pub v: f64,
    pub rho: f64,
    pub n_exponent: f64,
}

impl ScalingMap {
    /// Arguments for matrix size `n_dim` at window coordinates `y`.
    pub fn map_points(&self, y: &[f64], n_dim: usize) -> Vec<Complex64> {
        let denom = self.rho * (n_dim as f64).powf(self.n_exponent);
        y.iter().map(|&yj| Complex64::new(self.v + yj / denom, 0.0)).collect()
    }
}

/// Classification of one `(t, b)` parameter point.
#[derive(Clone, Debug)]
pub struct RegimeReport {
    pub family: Family,
    pub regime: Regime,
    /// Gaussian: the three saddle points `{0, +-sqrt(t - b^2)}` of the
    /// rate function (imaginary on the supercritical side, a triple zero at
    /// the transition). Laguerre: the single saddle `t - b`.
    pub saddle_points: Vec<Complex64>,
    pub scaling: ScalingMap,
    pub t: f64,
    pub b: f64,
}

/// Relative half-width of the band treated as exactly critical.
pub const CRITICAL_BAND: f64 = 1e-12;

/// The window map for a known regime at parameters `(t, b)`.
///
/// Used directly by scans, where the regime is fixed up front and the
/// critical time drifts with `N`, so re-classifying from `t` would lie.
pub fn scaling_for(family: Family, regime: Regime, t: f64, b: f64) -> ScalingMap {
    match (family, regime) {
        (Family::Gaussian, Regime::Critical) => ScalingMap { v: 0.0, rho: 1.0, n_exponent: 0.75 },
        (Family::Gaussian, Regime::Subcritical) => {
            ScalingMap { v: 0.0, rho: (t - b * b).sqrt() / t, n_exponent: 1.0 }
        }
        (Family::Gaussian, Regime::Supercritical) => {
            ScalingMap { v: 0.0, rho: b / (t * (b * b - t)).sqrt(), n_exponent: 0.5 }
        }
        (Family::Laguerre, Regime::Critical) => ScalingMap { v: 0.0, rho: 1.0 / b, n_exponent: 1.5 },
        (Family::Laguerre, Regime::Subcritical) => {
            ScalingMap { v: 0.0, rho: (t - b) / (t * t), n_exponent: 2.0 }
        }
        (Family::Laguerre, Regime::Supercritical) => {
            ScalingMap { v: 0.0, rho: b / (t * (b - t)), n_exponent: 1.0 }
        }
    }
}

/// Classifies `(t, b)` for the given family and reports saddle data plus
/// the regime's window map.
///
/// # Edge cases
/// - Equality with the transition point is decided within `CRITICAL_BAND`
///   relative tolerance; exact floating-point equality is not required.
/// - Nonpositive `t` or `b` is a domain error.
pub fn classify_regime(family: Family, t: f64, b: f64) -> Result<RegimeReport, TransitionError> {
    if !(t.is_finite() && t > 0.0) {
        return Err(TransitionError::Domain(format!("t must be positive, got {t}")));
    }
    if !(b.is_finite() && b > 0.0) {
        return Err(TransitionError::Domain(format!("b must be positive, got {b}")));
    }
    match family {
        Family::Gaussian => {
            let disc = t - b * b;
            let band = CRITICAL_BAND * t.max(b * b);
            let (regime, saddle_points) = if disc.abs() <= band {
                (Regime::Critical, vec![Complex64::new(0.0, 0.0); 3])
            } else if disc > 0.0 {
                let s = disc.sqrt();
                (
                    Regime::Subcritical,
                    vec![Complex64::new(0.0, 0.0), Complex64::new(s, 0.0), Complex64::new(-s, 0.0)],
                )
            } else {
                let s = (-disc).sqrt();
                (
                    Regime::Supercritical,
                    vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, s), Complex64::new(0.0, -s)],
                )
            };
            let scaling = scaling_for(family, regime, t, b);
            Ok(RegimeReport { family, regime, saddle_points, scaling, t, b })
        }
        Family::Laguerre => {
            let disc = t - b;
            let band = CRITICAL_BAND * t.max(b);
            let regime = if disc.abs() <= band {
                Regime::Critical
            } else if disc > 0.0 {
                Regime::Subcritical
            } else {
                Regime::Supercritical
            };
            let z0 = if regime == Regime::Critical { 0.0 } else { disc };
            Ok(RegimeReport {
                family,
                regime,
                saddle_points: vec![Complex64::new(z0, 0.0)],
                scaling: scaling_for(family, regime, t, b),
                t,
                b,
            })
        }
    }
}

/// Residual of a reported Gaussian saddle point in the defining cubic
/// `xi^3 - v xi^2 - (b^2 - t) xi + v b^2` at `v = 0`, with `xi = -i z`.
pub fn gaussian_saddle_residual(z: Complex64, t: f64, b: f64) -> f64 {
    let xi = Complex64::new(0.0, -1.0) * z;
    (xi * xi * xi - (b * b - t) * xi).norm()
}
