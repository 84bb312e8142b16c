use serde::{Deserialize, Serialize};

use super::EldError;

/// One thermal unit: output limits in MW, fuel cost `a P^2 + b P + c` in $,
/// emission `ea P^2 + eb P + ec` in lb.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorUnit {
    pub p_min: f64,
    pub p_max: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub ea: f64,
    pub eb: f64,
    pub ec: f64,
}

impl GeneratorUnit {
    /// A unit whose emission curve reuses the fuel-cost coefficients.
    pub fn with_fuel_as_emission(p_min: f64, p_max: f64, a: f64, b: f64, c: f64) -> Self {
        Self {
            p_min,
            p_max,
            a,
            b,
            c,
            ea: a,
            eb: b,
            ec: c,
        }
    }

    pub fn fuel_cost(&self, p: f64) -> f64 {
        self.a * p * p + self.b * p + self.c
    }

    pub fn emission(&self, p: f64) -> f64 {
        self.ea * p * p + self.eb * p + self.ec
    }

    /// Checks limits and convexity; `index` is only used in the error.
    pub fn validate(&self, index: usize) -> Result<(), EldError> {
        let fail = |reason: &str| {
            Err(EldError::InvalidUnit {
                index,
                reason: reason.into(),
            })
        };
        let fields = [
            self.p_min, self.p_max, self.a, self.b, self.c, self.ea, self.eb, self.ec,
        ];
        if fields.iter().any(|v| !v.is_finite()) {
            return fail("non-finite coefficient");
        }
        if self.p_min < 0.0 {
            return fail("p_min is negative");
        }
        if self.p_min >= self.p_max {
            return fail("p_min must be below p_max");
        }
        if self.a < 0.0 || self.ea < 0.0 {
            return fail("quadratic coefficients must be non-negative");
        }
        Ok(())
    }
}
