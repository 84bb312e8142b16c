use serde::{Deserialize, Serialize};

use super::repair::residual;
use super::{
    check_len, emission, fuel_cost, price_penalty_factor, repair, transmission_loss, EldError,
    GeneratorUnit, LossMatrix,
};
use crate::fdo::Bounds;

pub const DEFAULT_BALANCE_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_PENALTY_WEIGHT: f64 = 1e6;

/// How fuel cost and emission are combined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DispatchMode {
    /// `FC + penalty_b * EC`, `penalty_b` in $/lb.
    Ceed { penalty_b: f64 },
    /// Minimize `FC` subject to `EC <= e_limit` (lb).
    Eced { e_limit: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DispatchProblem {
    units: Vec<GeneratorUnit>,
    loss: LossMatrix,
    demand: f64,
    mode: DispatchMode,
    balance_tolerance: f64,
    penalty_weight: f64,
}

/// A repaired allocation and its figures of merit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DispatchSolution {
    pub powers: Vec<f64>,
    pub fuel_cost: f64,
    pub emission: f64,
    /// Physical network loss from the B-coefficients, MW.
    pub loss: f64,
    /// `sum(P) - loss - demand`, MW.
    pub balance_residual: f64,
    /// `false` when repair stopped before reaching the tolerance.
    pub converged: bool,
}

impl DispatchProblem {
    pub fn new(
        units: Vec<GeneratorUnit>,
        loss: LossMatrix,
        demand: f64,
        mode: DispatchMode,
    ) -> Result<Self, EldError> {
        if units.is_empty() {
            return Err(EldError::InvalidProblem("no units".into()));
        }
        for (i, u) in units.iter().enumerate() {
            u.validate(i)?;
        }
        check_len(units.len(), loss.dim())?;
        if !(demand.is_finite() && demand > 0.0) {
            return Err(EldError::InvalidProblem(format!(
                "demand {demand} must be positive"
            )));
        }
        let capacity: f64 = units.iter().map(|u| u.p_max).sum();
        if capacity < demand {
            return Err(EldError::Infeasible { demand, capacity });
        }
        match mode {
            DispatchMode::Ceed { penalty_b } if !(penalty_b.is_finite() && penalty_b >= 0.0) => {
                return Err(EldError::InvalidProblem(format!(
                    "penalty factor {penalty_b}"
                )));
            }
            DispatchMode::Eced { e_limit } if e_limit.is_nan() => {
                return Err(EldError::InvalidProblem("emission limit is NaN".into()));
            }
            _ => {}
        }
        Ok(Self {
            units,
            loss,
            demand,
            mode,
            balance_tolerance: DEFAULT_BALANCE_TOLERANCE,
            penalty_weight: DEFAULT_PENALTY_WEIGHT,
        })
    }

    /// CEED problem whose penalty factor comes from [`price_penalty_factor`].
    pub fn ceed(
        units: Vec<GeneratorUnit>,
        loss: LossMatrix,
        demand: f64,
    ) -> Result<Self, EldError> {
        let penalty_b = price_penalty_factor(&units, demand)?;
        Self::new(units, loss, demand, DispatchMode::Ceed { penalty_b })
    }

    pub fn with_balance_tolerance(mut self, tolerance: f64) -> Result<Self, EldError> {
        if tolerance.is_nan() || tolerance <= 0.0 {
            return Err(EldError::InvalidProblem(format!(
                "balance tolerance {tolerance} must be positive"
            )));
        }
        self.balance_tolerance = tolerance;
        Ok(self)
    }

    pub fn with_penalty_weight(mut self, weight: f64) -> Self {
        self.penalty_weight = weight;
        self
    }

    pub fn with_mode(mut self, mode: DispatchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn units(&self) -> &[GeneratorUnit] {
        &self.units
    }

    pub fn loss(&self) -> &LossMatrix {
        &self.loss
    }

    pub fn demand(&self) -> f64 {
        self.demand
    }

    pub fn mode(&self) -> DispatchMode {
        self.mode
    }

    pub fn balance_tolerance(&self) -> f64 {
        self.balance_tolerance
    }

    pub fn penalty_weight(&self) -> f64 {
        self.penalty_weight
    }

    pub fn dim(&self) -> usize {
        self.units.len()
    }

    /// Unit output limits as a search box.
    pub fn bounds(&self) -> Bounds {
        Bounds::new(
            self.units.iter().map(|u| u.p_min).collect(),
            self.units.iter().map(|u| u.p_max).collect(),
        )
        .expect("validated unit limits form a box")
    }

    pub fn balance_residual(&self, powers: &[f64]) -> Result<f64, EldError> {
        residual(self, powers)
    }

    /// Repairs `raw_powers`, falling back to the best-effort iterate when the
    /// repair does not converge.
    fn repaired(&self, raw_powers: &[f64]) -> Result<(Vec<f64>, bool), EldError> {
        match repair(self, raw_powers) {
            Ok(p) => Ok((p, true)),
            Err(EldError::NonConvergent { powers, .. }) => Ok((powers, false)),
            Err(e) => Err(e),
        }
    }

    fn score(&self, p: &[f64]) -> Result<f64, EldError> {
        let fc = fuel_cost(&self.units, p)?;
        let ec = emission(&self.units, p)?;
        let imbalance = self.penalty_weight * self.balance_residual(p)?.abs();
        Ok(match self.mode {
            DispatchMode::Ceed { penalty_b } => fc + penalty_b * ec + imbalance,
            DispatchMode::Eced { e_limit } => {
                fc + self.penalty_weight * (ec - e_limit).max(0.0) + imbalance
            }
        })
    }

    /// Fitness under the problem's own mode.
    pub fn fitness(&self, raw_powers: &[f64]) -> Result<f64, EldError> {
        let (p, _) = self.repaired(raw_powers)?;
        self.score(&p)
    }

    /// Objective closure for the optimizer; errors surface as NaN, which the
    /// optimizer reports as a non-finite objective.
    pub fn objective(&self) -> impl Fn(&[f64]) -> f64 + '_ {
        move |x| self.fitness(x).unwrap_or(f64::NAN)
    }

    pub fn solution(&self, raw_powers: &[f64]) -> Result<DispatchSolution, EldError> {
        let (powers, converged) = self.repaired(raw_powers)?;
        Ok(DispatchSolution {
            fuel_cost: fuel_cost(&self.units, &powers)?,
            emission: emission(&self.units, &powers)?,
            loss: transmission_loss(&self.loss, &powers)?,
            balance_residual: self.balance_residual(&powers)?,
            converged,
            powers,
        })
    }
}

/// `FC + b * EC + w * |residual|` of the repaired allocation.
pub fn ceed_fitness(problem: &DispatchProblem, raw_powers: &[f64]) -> Result<f64, EldError> {
    match problem.mode {
        DispatchMode::Ceed { .. } => problem.fitness(raw_powers),
        DispatchMode::Eced { .. } => Err(EldError::WrongMode),
    }
}

/// `FC + w * max(0, EC - limit) + w * |residual|` of the repaired allocation.
pub fn eced_fitness(problem: &DispatchProblem, raw_powers: &[f64]) -> Result<f64, EldError> {
    match problem.mode {
        DispatchMode::Eced { .. } => problem.fitness(raw_powers),
        DispatchMode::Ceed { .. } => Err(EldError::WrongMode),
    }
}
