use serde::{Deserialize, Serialize};

use super::FdoError;
use crate::chaos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Minimize,
    Maximize,
}

impl Direction {
    /// `true` when `candidate` is strictly better than `incumbent`.
    pub fn improves(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            Direction::Minimize => candidate < incumbent,
            Direction::Maximize => candidate > incumbent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Initializer {
    Uniform,
    Sobol,
}

/// Source of the weight factor subtracted from the fitness ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum WeightMode {
    /// Fixed weight factor, 0 or 1.
    Constant(f64),
    /// Sine-map schedule advanced once per epoch.
    ChaoticSine { m: f64, w0: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub population: usize,
    pub epochs: usize,
    pub seed: u64,
    pub weight_mode: WeightMode,
    pub initializer: Initializer,
    pub direction: Direction,
    /// Stability exponent of the Levy walk, in `(1, 2]`.
    pub levy_beta: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self::standard()
    }
}

impl OptimizerConfig {
    /// Plain FDO: uniform initialization and a constant weight factor of 0.
    pub fn standard() -> Self {
        Self {
            population: 50,
            epochs: 100,
            seed: 0,
            weight_mode: WeightMode::Constant(0.0),
            initializer: Initializer::Uniform,
            direction: Direction::Minimize,
            levy_beta: 1.5,
        }
    }

    /// Enhanced FDO: Sobol initialization and the sine-map weight factor.
    pub fn enhanced() -> Self {
        Self {
            weight_mode: WeightMode::ChaoticSine {
                m: chaos::DEFAULT_M,
                w0: chaos::DEFAULT_W0,
            },
            initializer: Initializer::Sobol,
            ..Self::standard()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_epochs(mut self, epochs: usize) -> Self {
        self.epochs = epochs;
        self
    }

    pub fn with_population(mut self, population: usize) -> Self {
        self.population = population;
        self
    }

    pub fn validate(&self) -> Result<(), FdoError> {
        let bad = |msg: String| Err(FdoError::InvalidConfig(msg));
        if self.population == 0 {
            return bad("population must be positive".into());
        }
        if !(self.levy_beta > 1.0 && self.levy_beta <= 2.0) {
            return bad(format!("levy_beta {} outside (1, 2]", self.levy_beta));
        }
        match self.weight_mode {
            WeightMode::Constant(wf) if wf != 0.0 && wf != 1.0 => {
                bad(format!("constant weight factor must be 0 or 1, got {wf}"))
            }
            WeightMode::ChaoticSine { m, .. } if !(m > 0.0 && m < 4.0) => {
                bad(format!("sine-map control {m} outside (0, 4)"))
            }
            // w0 = 0 (or 1) pins the map at zero, which is how constant wf = 0
            // is reproduced through the chaotic path.
            WeightMode::ChaoticSine { w0, .. } if !(0.0..=1.0).contains(&w0) => {
                bad(format!("sine-map seed {w0} outside [0, 1]"))
            }
            _ => Ok(()),
        }
    }
}
