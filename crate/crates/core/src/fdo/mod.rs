//! Fitness Dependent Optimizer over box-bounded continuous spaces.
//!
//! Each scout agent moves by a *pace* whose size is set by the fitness weight
//! `fw = |best / current| - wf` (minimization) and whose direction is random.
//! When `fw` is exactly 0 or 1, or the ratio is undefined, the pace falls back
//! to a Levy-flight random walk scaled by the agent's own position.
//!
//! A candidate replaces the agent's position only when strictly better. A
//! rejected candidate is retried once with the agent's previously accepted
//! pace before the agent stays put for the epoch.

mod agent;
mod config;
mod optimizer;
mod pace;

pub use agent::{Bounds, ScoutAgent};
pub use config::{Direction, Initializer, OptimizerConfig, WeightMode};
pub use optimizer::{run, FdoRng, OptimizerState, RunRecord};
pub use pace::{
    compute_pace, fitness_weight, levy_step, pace_from_walk, pace_from_weight, DegenerateDivide,
    LevyFlight, Pace, PaceRule,
};

use thiserror::Error;

use crate::init::InitError;

#[derive(Debug, Error, PartialEq)]
pub enum FdoError {
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(String),
    #[error("objective returned non-finite value {value} at {position:?}")]
    NonFiniteObjective { value: f64, position: Vec<f64> },
    #[error(transparent)]
    Init(#[from] InitError),
}
