//! Economic load dispatch model.
//!
//! Fuel cost and emission are per-unit quadratics, network losses use the
//! B-coefficient form `P'BP + B0'P + B00`, and the two objectives are merged
//! either with a price penalty factor (CEED) or by capping emission (ECED).
//! Candidate allocations are first repaired onto the power-balance manifold
//! `sum(P) - loss(P) = demand`, then scored.

mod cost;
mod loss;
mod penalty;
mod problem;
mod repair;
mod unit;

pub use cost::{emission, fuel_cost};
pub use loss::{transmission_loss, LossMatrix};
pub use penalty::{penalty_ratios, price_penalty_factor};
pub use problem::{
    ceed_fitness, eced_fitness, DispatchMode, DispatchProblem, DispatchSolution,
    DEFAULT_BALANCE_TOLERANCE, DEFAULT_PENALTY_WEIGHT,
};
pub use repair::{repair, MAX_REPAIR_ITERATIONS};
pub use unit::GeneratorUnit;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EldError {
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unit {index}: {reason}")]
    InvalidUnit { index: usize, reason: String },
    #[error("invalid loss matrix: {0}")]
    InvalidLossMatrix(String),
    #[error("demand {demand} MW exceeds total capacity {capacity} MW")]
    Infeasible { demand: f64, capacity: f64 },
    #[error("unit {index} has zero emission at full output")]
    ZeroEmission { index: usize },
    #[error("balance repair stalled at residual {residual} MW")]
    NonConvergent { residual: f64, powers: Vec<f64> },
    #[error("invalid dispatch problem: {0}")]
    InvalidProblem(String),
    #[error("fitness requested for the wrong dispatch mode")]
    WrongMode,
}

fn check_len(expected: usize, got: usize) -> Result<(), EldError> {
    if expected == got {
        Ok(())
    } else {
        Err(EldError::LengthMismatch { expected, got })
    }
}
