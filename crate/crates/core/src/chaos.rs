//! Chaotic sine map used as a dynamic weight factor.
//!
//! The map is `x <- (m / 4) * sin(pi * x)` with control parameter `0 < m < 4`.
//! For inputs in `[0, 1]` every output lies in `[0, m / 4]`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

/// Default control parameter of the enhanced optimizer.
pub const DEFAULT_M: f64 = 0.3;
/// Default starting value of the map.
pub const DEFAULT_W0: f64 = 0.7;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SineMap {
    m: f64,
    value: f64,
}

impl SineMap {
    /// Returns `None` unless `0 < m < 4` and `value` is finite.
    pub fn new(m: f64, value: f64) -> Option<Self> {
        (m > 0.0 && m < 4.0 && value.is_finite()).then_some(Self { m, value })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// Most recently stored value (the seed before the first step).
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Upper end of the map's range, `m / 4`.
    pub fn ceiling(&self) -> f64 {
        self.m / 4.0
    }

    /// Advances the map one step and returns the new value.
    pub fn next_value(&mut self) -> f64 {
        self.value = self.m / 4.0 * (PI * self.value).sin();
        self.value
    }
}

impl Iterator for SineMap {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        Some(self.next_value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fixed_points_of_sine() {
        let mut map = SineMap::new(0.3, 0.0).unwrap();
        assert_eq!(map.next_value(), 0.0);

        let mut map = SineMap::new(0.3, 1.0).unwrap();
        assert!(map.next_value().abs() < 1e-15);
    }

    #[test]
    fn half_maps_to_ceiling() {
        let mut map = SineMap::new(0.3, 0.5).unwrap();
        assert!((map.next_value() - 0.075).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range_control() {
        assert!(SineMap::new(0.0, 0.5).is_none());
        assert!(SineMap::new(4.0, 0.5).is_none());
        assert!(SineMap::new(0.3, f64::NAN).is_none());
    }

    #[test]
    fn zero_seed_stays_at_zero() {
        let map = SineMap::new(0.3, 0.0).unwrap();
        assert!(map.take(100).all(|v| v == 0.0));
    }

    proptest! {
        #[test]
        fn iterates_stay_in_range(m in 0.01f64..3.99, w0 in 0.0f64..1.0) {
            let map = SineMap::new(m, w0).unwrap();
            for v in map.take(500) {
                prop_assert!((0.0..=m / 4.0).contains(&v));
            }
        }
    }
}
