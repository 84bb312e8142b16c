//! Gray-code Sobol sequence with Joe-Kuo direction numbers.
//!
//! The direction table ships as `data/joe-kuo-32.txt`, one row per dimension
//! from 2 upward: `d s a m_1 .. m_s`, where `s` is the degree of the primitive
//! polynomial, `a` packs its interior coefficients (highest-order term in the
//! most significant bit) and `m_i` are the odd initial direction integers with
//! `m_i < 2^i`. Dimension 1 is the van der Corput sequence and has no row.
//! Lines starting with `#` are comments.

use std::sync::OnceLock;

use super::InitError;

const BITS: usize = 32;
const TABLE: &str = include_str!("../../data/joe-kuo-32.txt");

/// Highest dimension covered by the embedded table.
pub const MAX_DIMENSION: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionRow {
    pub dimension: usize,
    pub degree: u32,
    pub coefficients: u32,
    pub initial: Vec<u32>,
}

impl DirectionRow {
    /// Parses a whole table in the shipped text format.
    pub fn parse_table(text: &str) -> Result<Vec<DirectionRow>, InitError> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| InitError::Table {
                line: line_no,
                reason,
            };
            let fields = line
                .split_whitespace()
                .map(|f| f.parse::<u32>().map_err(|e| err(format!("`{f}`: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if fields.len() < 4 {
                return Err(err("expected `d s a m_1 .. m_s`".into()));
            }
            let (dimension, degree, coefficients) = (fields[0] as usize, fields[1], fields[2]);
            let initial = fields[3..].to_vec();
            if degree == 0 || degree as usize >= BITS || initial.len() != degree as usize {
                return Err(err(format!(
                    "degree {degree} with {} initial values",
                    initial.len()
                )));
            }
            if coefficients >> (degree - 1) != 0 {
                return Err(err(format!(
                    "coefficients {coefficients} exceed degree {degree}"
                )));
            }
            for (i, m) in initial.iter().enumerate() {
                if m % 2 == 0 || *m >= 1 << (i + 1) {
                    return Err(err(format!(
                        "m_{} = {m} must be odd and below 2^{}",
                        i + 1,
                        i + 1
                    )));
                }
            }
            let expected = rows.last().map_or(2, |r: &DirectionRow| r.dimension + 1);
            if dimension != expected {
                return Err(err(format!("dimension {dimension}, expected {expected}")));
            }
            rows.push(DirectionRow {
                dimension,
                degree,
                coefficients,
                initial,
            });
        }
        Ok(rows)
    }

    /// Direction integers `v_0 .. v_31`, already left-aligned to 32 bits.
    fn directions(&self) -> [u32; BITS] {
        let s = self.degree as usize;
        let mut v = [0u32; BITS];
        for (j, m) in self.initial.iter().enumerate() {
            v[j] = m << (BITS - 1 - j);
        }
        for j in s..BITS {
            let mut x = v[j - s] ^ (v[j - s] >> s);
            for k in 1..s {
                if (self.coefficients >> (s - 1 - k)) & 1 == 1 {
                    x ^= v[j - k];
                }
            }
            v[j] = x;
        }
        v
    }
}

fn embedded_table() -> &'static [DirectionRow] {
    static ROWS: OnceLock<Vec<DirectionRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        DirectionRow::parse_table(TABLE).expect("embedded direction table is valid")
    })
}

/// Unscrambled Sobol sequence in `[0, 1)^D`.
///
/// The all-zero point at index 0 is skipped: the first call to
/// [`SobolGenerator::next_point`] returns index 1, `(0.5, .., 0.5)`.
#[derive(Debug, Clone)]
pub struct SobolGenerator {
    directions: Vec<[u32; BITS]>,
    current: Vec<u32>,
    index: u32,
}

impl SobolGenerator {
    pub fn new(dimension: usize) -> Result<Self, InitError> {
        Self::with_table(dimension, embedded_table())
    }

    pub fn with_table(dimension: usize, rows: &[DirectionRow]) -> Result<Self, InitError> {
        let max = rows.len() + 1;
        if dimension == 0 || dimension > max {
            return Err(InitError::UnsupportedDimension {
                dim: dimension,
                max,
            });
        }
        let mut directions = Vec::with_capacity(dimension);
        let mut first = [0u32; BITS];
        for (j, v) in first.iter_mut().enumerate() {
            *v = 1 << (BITS - 1 - j);
        }
        directions.push(first);
        directions.extend(rows[..dimension - 1].iter().map(DirectionRow::directions));
        Ok(Self {
            current: vec![0; dimension],
            directions,
            index: 0,
        })
    }

    pub fn dimension(&self) -> usize {
        self.directions.len()
    }

    /// Sequence index of the most recently emitted point (0 before the first call).
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn next_point(&mut self) -> Result<Vec<f64>, InitError> {
        if self.index == u32::MAX {
            return Err(InitError::SequenceExhausted);
        }
        let bit = self.index.trailing_ones() as usize;
        for (x, v) in self.current.iter_mut().zip(&self.directions) {
            *x ^= v[bit];
        }
        self.index += 1;
        Ok(self
            .current
            .iter()
            .map(|&x| f64::from(x) / 4_294_967_296.0)
            .collect())
    }
}

impl Iterator for SobolGenerator {
    type Item = Vec<f64>;

    fn next(&mut self) -> Option<Vec<f64>> {
        self.next_point().ok()
    }
}
