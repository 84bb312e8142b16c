//! Fitness Dependent Optimizer (FDO) and its enhanced variant, applied to
//! economic load dispatch.
//!
//! The crate is organized by concern:
//!
//! - [`fdo`]: the generic box-bounded single-objective optimizer.
//! - [`init`]: uniform and Sobol population initializers.
//! - [`chaos`]: the sine map that schedules the enhanced weight factor.
//! - [`eld`]: the dispatch model (fuel cost, emission, B-coefficient losses,
//!   price penalty factor, balance repair, CEED/ECED fitness).
//! - [`bench`]: dataset ingestion, the experiment matrix, one-way ANOVA and
//!   report emission.
//!
//! ```
//! use fdo_eld::fdo::{self, Bounds, OptimizerConfig};
//!
//! let bounds = Bounds::new(vec![-5.0; 2], vec![5.0; 2]).unwrap();
//! let config = OptimizerConfig { epochs: 50, ..OptimizerConfig::default() };
//! let record = fdo::run(|x: &[f64]| x.iter().map(|v| v * v).sum(), &bounds, &config).unwrap();
//! assert!(record.best_fitness < 1.0);
//! ```

pub mod bench;
pub mod chaos;
pub mod eld;
pub mod fdo;
pub mod init;

pub use chaos::SineMap;
pub use fdo::{Bounds, OptimizerConfig, RunRecord};
