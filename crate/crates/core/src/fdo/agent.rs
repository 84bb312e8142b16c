use serde::{Deserialize, Serialize};

use super::FdoError;

/// Axis-aligned search box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, FdoError> {
        if lower.is_empty() {
            return Err(FdoError::InvalidBounds("zero-dimensional box".into()));
        }
        if lower.len() != upper.len() {
            return Err(FdoError::InvalidBounds(format!(
                "lower has {} components, upper has {}",
                lower.len(),
                upper.len()
            )));
        }
        for (d, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(FdoError::InvalidBounds(format!(
                    "non-finite bound in dimension {d}"
                )));
            }
            if lo >= hi {
                return Err(FdoError::InvalidBounds(format!(
                    "dimension {d}: lower {lo} is not below upper {hi}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn clamp(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, lo), hi)| (*lo..=*hi).contains(v))
    }

    /// Affine image of a unit-cube point, `lower + u * (upper - lower)`.
    pub fn map_unit(&self, u: &[f64]) -> Vec<f64> {
        u.iter()
            .zip(&self.lower)
            .zip(&self.upper)
            .map(|((u, lo), hi)| (lo + u * (hi - lo)).min(*hi))
            .collect()
    }

    /// Inverse of [`Bounds::map_unit`].
    pub fn unmap(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.lower)
            .zip(&self.upper)
            .map(|((x, lo), hi)| (x - lo) / (hi - lo))
            .collect()
    }
}

/// One search agent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoutAgent {
    pub position: Vec<f64>,
    /// Last accepted movement; zero until the first acceptance.
    pub pace: Vec<f64>,
    pub fitness: f64,
}

impl ScoutAgent {
    pub fn new(position: Vec<f64>, fitness: f64) -> Self {
        let pace = vec![0.0; position.len()];
        Self {
            position,
            pace,
            fitness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_boxes() {
        assert!(Bounds::new(vec![], vec![]).is_err());
        assert!(Bounds::new(vec![0.0], vec![0.0]).is_err());
        assert!(Bounds::new(vec![1.0], vec![0.0]).is_err());
        assert!(Bounds::new(vec![0.0, 0.0], vec![1.0]).is_err());
        assert!(Bounds::new(vec![f64::NEG_INFINITY], vec![0.0]).is_err());
    }

    #[test]
    fn clamp_and_contains() {
        let b = Bounds::new(vec![0.0, -1.0], vec![1.0, 1.0]).unwrap();
        let mut x = vec![2.0, -3.0];
        assert!(!b.contains(&x));
        b.clamp(&mut x);
        assert_eq!(x, vec![1.0, -1.0]);
        assert!(b.contains(&x));
    }

    #[test]
    fn map_roundtrip() {
        let b = Bounds::new(vec![3.0, -2.0], vec![3.0001, 8.0]).unwrap();
        let u = [0.25, 0.75];
        let x = b.map_unit(&u);
        assert!(b.contains(&x));
        let back = b.unmap(&x);
        assert!((back[0] - 0.25).abs() < 1e-9);
        assert!((back[1] - 0.75).abs() < 1e-15);
    }
}
