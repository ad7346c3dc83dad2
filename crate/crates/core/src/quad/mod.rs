//! Quadrature toolkit: Gauss-Kronrod panels, a Filon-type rule for strongly
//! oscillatory transforms, and tail-completed semi-infinite moments.

mod filon;
mod kronrod;
mod tail;

pub use filon::filon_oscillatory;
pub use kronrod::{adaptive_complex_panels, adaptive_real, gk15_complex, gk15_real};
pub use tail::{tail_completed_integral, TailOutcome};

use crate::error::{Error, Result};

/// Tolerances and budgets shared by every integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute tolerance on integral values.
    pub abs_tol: f64,
    /// Relative tolerance on integral values.
    pub rel_tol: f64,
    /// Budget of panels/subdivisions for one integral.
    pub max_panels: usize,
    /// Integrand magnitude below which infinite tails are truncated.
    pub truncation_epsilon: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_panels: 200_000,
            truncation_epsilon: 1e-16,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.truncation_epsilon > 0.0) {
            return Err(Error::Domain(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if self.max_panels < 1 {
            return Err(Error::Domain("max_panels must be at least 1".into()));
        }
        Ok(())
    }

    /// Combined tolerance for a value of the given magnitude.
    pub fn tolerance_for(&self, magnitude: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * magnitude.abs())
    }
}

/// Radius r with r^poly_power * exp(-coef * r^alpha) <= eps, by fixed point.
pub fn decay_radius(coef: f64, alpha: f64, eps: f64, poly_power: f64) -> f64 {
    let l = (1.0 / eps).ln();
    let mut r = (l / coef).powf(1.0 / alpha).max(1.0);
    for _ in 0..60 {
        r = ((l + poly_power * (1.0 + r).ln()) / coef).powf(1.0 / alpha);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decay_radius_bounds_integrand() {
        for (coef, alpha, pow) in [(1.0, 2.0, 0.0), (2.0, 0.5, 2.0), (0.5, 1.0, 2.0)] {
            let r = decay_radius(coef, alpha, 1e-16, pow);
            let v = r.powf(pow) * (-coef * r.powf(alpha)).exp();
            assert!(v <= 1.1e-16, "coef={coef} alpha={alpha}: residual {v:e}");
        }
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::default().validate().is_ok());
        let bad = QuadratureConfig {
            abs_tol: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
