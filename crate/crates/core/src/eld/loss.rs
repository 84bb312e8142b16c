use serde::{Deserialize, Serialize};

use super::{check_len, EldError};

/// B-coefficient loss model. `b` is row-major `dim x dim` in 1/MW.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LossMatrix {
    dim: usize,
    b: Vec<f64>,
    b0: Vec<f64>,
    b00: f64,
}

impl LossMatrix {
    pub fn new(rows: Vec<Vec<f64>>, b0: Vec<f64>, b00: f64) -> Result<Self, EldError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(EldError::InvalidLossMatrix("empty matrix".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != dim) {
            return Err(EldError::InvalidLossMatrix(format!(
                "row {i} has {} entries, expected {dim}",
                rows[i].len()
            )));
        }
        if b0.len() != dim {
            return Err(EldError::InvalidLossMatrix(format!(
                "B0 has {} entries, expected {dim}",
                b0.len()
            )));
        }
        let b: Vec<f64> = rows.into_iter().flatten().collect();
        if b.iter()
            .chain(&b0)
            .chain(std::iter::once(&b00))
            .any(|v| !v.is_finite())
        {
            return Err(EldError::InvalidLossMatrix("non-finite coefficient".into()));
        }
        let scale = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for i in 0..dim {
            for j in i + 1..dim {
                let (x, y) = (b[i * dim + j], b[j * dim + i]);
                if (x - y).abs() > 1e-12 * scale {
                    return Err(EldError::InvalidLossMatrix(format!(
                        "B[{i}][{j}] = {x} but B[{j}][{i}] = {y}"
                    )));
                }
            }
        }
        Ok(Self { dim, b, b0, b00 })
    }

    /// Quadratic term only; `B0 = 0`, `B00 = 0`.
    pub fn quadratic(rows: Vec<Vec<f64>>) -> Result<Self, EldError> {
        let dim = rows.len();
        Self::new(rows, vec![0.0; dim], 0.0)
    }

    /// Lossless network of the given size.
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            b: vec![0.0; dim * dim],
            b0: vec![0.0; dim],
            b00: 0.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.b[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.b.chunks(self.dim)
    }

    pub fn b0(&self) -> &[f64] {
        &self.b0
    }

    pub fn b00(&self) -> f64 {
        self.b00
    }

    pub fn transposed(&self) -> Self {
        let mut b = vec![0.0; self.b.len()];
        for i in 0..self.dim {
            for j in 0..self.dim {
                b[j * self.dim + i] = self.get(i, j);
            }
        }
        Self { b, ..self.clone() }
    }

    fn eval(&self, p: &[f64]) -> f64 {
        let quad: f64 = self
            .rows()
            .zip(p)
            .map(|(row, pi)| pi * row.iter().zip(p).map(|(bij, pj)| bij * pj).sum::<f64>())
            .sum();
        let lin: f64 = self.b0.iter().zip(p).map(|(b, p)| b * p).sum();
        quad + lin + self.b00
    }
}

/// Network loss `P'BP + B0'P + B00` in MW.
pub fn transmission_loss(loss: &LossMatrix, powers: &[f64]) -> Result<f64, EldError> {
    check_len(loss.dim, powers.len())?;
    Ok(loss.eval(powers))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_powers_zero_loss() {
        let m = LossMatrix::quadratic(vec![vec![1e-4, 2e-5], vec![2e-5, 3e-4]]).unwrap();
        assert_eq!(transmission_loss(&m, &[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn single_unit() {
        let m = LossMatrix::quadratic(vec![vec![0.0001]]).unwrap();
        assert!((transmission_loss(&m, &[100.0]).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn linear_and_constant_terms() {
        let m =
            LossMatrix::new(vec![vec![0.0, 0.0], vec![0.0, 0.0]], vec![0.01, -0.02], 0.5).unwrap();
        assert!((transmission_loss(&m, &[100.0, 50.0]).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(LossMatrix::quadratic(vec![]).is_err());
        assert!(LossMatrix::quadratic(vec![vec![1.0, 2.0], vec![3.0, 1.0]]).is_err());
        assert!(LossMatrix::quadratic(vec![vec![1.0, 2.0], vec![2.0]]).is_err());
        assert!(LossMatrix::new(vec![vec![1.0]], vec![], 0.0).is_err());
        assert!(LossMatrix::quadratic(vec![vec![f64::NAN]]).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let m = LossMatrix::zero(3);
        assert_eq!(
            transmission_loss(&m, &[1.0]),
            Err(EldError::LengthMismatch {
                expected: 3,
                got: 1
            })
        );
    }

    fn classic_six() -> LossMatrix {
        let rows = [
            [1.40, 0.17, 0.15, 0.19, 0.26, 0.22],
            [0.17, 0.60, 0.13, 0.16, 0.15, 0.20],
            [0.15, 0.13, 0.65, 0.17, 0.24, 0.19],
            [0.19, 0.16, 0.17, 0.71, 0.30, 0.25],
            [0.26, 0.15, 0.24, 0.30, 0.69, 0.32],
            [0.22, 0.20, 0.19, 0.25, 0.32, 0.85],
        ];
        LossMatrix::quadratic(
            rows.iter()
                .map(|r| r.iter().map(|x| x * 1e-4).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn reference_allocation_frozen_value() {
        // numpy: P @ B @ P for the 400 MW chunk-1 FDO dispatch.
        let p = [
            70.44063664,
            69.28036315,
            38.43849912,
            31.18554733,
            31.07224457,
            160.2587123,
        ];
        let loss = transmission_loss(&classic_six(), &p).unwrap();
        assert!((loss - 5.944509806572482).abs() < 1e-9, "{loss}");
    }

    #[test]
    fn transpose_is_equivalent() {
        let m = LossMatrix::new(
            vec![
                vec![2e-4, 3e-5, 1e-5],
                vec![3e-5, 5e-4, 2e-5],
                vec![1e-5, 2e-5, 4e-4],
            ],
            vec![1e-3, -2e-3, 0.0],
            0.02,
        )
        .unwrap();
        let p = [120.0, 35.5, 80.25];
        let a = transmission_loss(&m, &p).unwrap();
        let b = transmission_loss(&m.transposed(), &p).unwrap();
        assert!((a - b).abs() <= 1e-12 * a.abs());
    }
}
