//! Population initializers.
//!
//! Both initializers produce points in the unit cube and map them affinely
//! into the search box. The Sobol initializer is deterministic and ignores
//! the random generator.

mod discrepancy;
mod population;
mod sobol;

pub use discrepancy::centered_l2_discrepancy;
pub use population::initialize_population;
pub use sobol::{DirectionRow, SobolGenerator, MAX_DIMENSION};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InitError {
    #[error("Sobol dimension {dim} unsupported (1..={max})")]
    UnsupportedDimension { dim: usize, max: usize },
    #[error("Sobol sequence exhausted after 2^32 - 1 points")]
    SequenceExhausted,
    #[error("population size must be at least 1")]
    EmptyPopulation,
    #[error("direction table line {line}: {reason}")]
    Table { line: usize, reason: String },
}
