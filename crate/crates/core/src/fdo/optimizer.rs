use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::pace::{compute_pace, fitness_weight, LevyFlight};
use super::{Bounds, FdoError, OptimizerConfig, ScoutAgent, WeightMode};
use crate::chaos::SineMap;
use crate::init::initialize_population;

/// Generator behind every stochastic draw of a run.
///
/// Seeded once from [`OptimizerConfig::seed`]. Draws are consumed in this
/// order: the uniform initial population (agent-major, dimension-minor; the
/// Sobol initializer draws nothing), then for every epoch and every agent in
/// index order either one scalar sign draw or one Levy vector (two normals
/// per component).
pub type FdoRng = ChaCha8Rng;

#[derive(Debug, Clone)]
enum WeightSchedule {
    Constant(f64),
    Chaotic { map: SineMap, ws: f64 },
}

/// Result of one optimizer run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub initial_best_fitness: f64,
    /// Global best fitness after each epoch.
    pub trace: Vec<f64>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub evaluations: u64,
}

#[derive(Debug, Clone)]
pub struct OptimizerState {
    pub agents: Vec<ScoutAgent>,
    pub global_best: ScoutAgent,
    pub epoch: usize,
    rng: FdoRng,
    schedule: WeightSchedule,
    levy: LevyFlight,
    evaluations: u64,
}

fn evaluate<F>(objective: &F, x: &[f64], evaluations: &mut u64) -> Result<f64, FdoError>
where
    F: Fn(&[f64]) -> f64 + ?Sized,
{
    *evaluations += 1;
    let value = objective(x);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(FdoError::NonFiniteObjective {
            value,
            position: x.to_vec(),
        })
    }
}

fn displaced(bounds: &Bounds, position: &[f64], pace: &[f64]) -> Vec<f64> {
    let mut x: Vec<f64> = position.iter().zip(pace).map(|(x, p)| x + p).collect();
    bounds.clamp(&mut x);
    x
}

impl OptimizerState {
    pub fn initialize<F>(
        objective: &F,
        bounds: &Bounds,
        config: &OptimizerConfig,
    ) -> Result<Self, FdoError>
    where
        F: Fn(&[f64]) -> f64 + ?Sized,
    {
        config.validate()?;
        let levy = LevyFlight::new(config.levy_beta)
            .ok_or_else(|| FdoError::InvalidConfig(format!("levy_beta {}", config.levy_beta)))?;
        let mut rng = FdoRng::seed_from_u64(config.seed);
        let positions =
            initialize_population(config.population, bounds, config.initializer, &mut rng)?;

        let mut evaluations = 0;
        let mut agents = Vec::with_capacity(positions.len());
        for position in positions {
            let fitness = evaluate(objective, &position, &mut evaluations)?;
            agents.push(ScoutAgent::new(position, fitness));
        }
        let mut best = 0;
        for (i, agent) in agents.iter().enumerate() {
            if config
                .direction
                .improves(agent.fitness, agents[best].fitness)
            {
                best = i;
            }
        }
        let global_best = agents[best].clone();

        let schedule = match config.weight_mode {
            WeightMode::Constant(wf) => WeightSchedule::Constant(wf),
            WeightMode::ChaoticSine { m, w0 } => {
                let mut map = SineMap::new(m, w0)
                    .ok_or_else(|| FdoError::InvalidConfig(format!("sine map m={m} w0={w0}")))?;
                let ws = map.next_value();
                WeightSchedule::Chaotic { map, ws }
            }
        };

        Ok(Self {
            agents,
            global_best,
            epoch: 0,
            rng,
            schedule,
            levy,
            evaluations,
        })
    }

    /// Weight factor in effect for the next epoch (`ws` under the sine schedule).
    pub fn weight_factor(&self) -> f64 {
        match self.schedule {
            WeightSchedule::Constant(wf) => wf,
            WeightSchedule::Chaotic { ws, .. } => ws,
        }
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// Moves every agent once, then advances the weight schedule.
    ///
    /// The global best is refreshed as soon as an agent improves on it, so
    /// later agents in the same epoch already steer by the new best.
    pub fn step_epoch<F>(
        &mut self,
        objective: &F,
        bounds: &Bounds,
        config: &OptimizerConfig,
    ) -> Result<(), FdoError>
    where
        F: Fn(&[f64]) -> f64 + ?Sized,
    {
        let direction = config.direction;
        let wf = self.weight_factor();

        for i in 0..self.agents.len() {
            let agent = &self.agents[i];
            let fw = fitness_weight(self.global_best.fitness, agent.fitness, wf, direction).ok();
            let pace = compute_pace(
                &agent.position,
                &self.global_best.position,
                fw,
                &self.levy,
                &mut self.rng,
            );

            let candidate = displaced(bounds, &agent.position, &pace.values);
            let fitness = evaluate(objective, &candidate, &mut self.evaluations)?;
            let accepted = if direction.improves(fitness, agent.fitness) {
                Some((candidate, fitness, Some(pace.values)))
            } else if agent.pace.iter().any(|p| *p != 0.0) {
                let retry = displaced(bounds, &agent.position, &agent.pace);
                let fitness = evaluate(objective, &retry, &mut self.evaluations)?;
                direction
                    .improves(fitness, agent.fitness)
                    .then_some((retry, fitness, None))
            } else {
                None
            };

            if let Some((position, fitness, pace)) = accepted {
                let agent = &mut self.agents[i];
                agent.position = position;
                agent.fitness = fitness;
                if let Some(pace) = pace {
                    agent.pace = pace;
                }
                if direction.improves(fitness, self.global_best.fitness) {
                    self.global_best = agent.clone();
                }
            }
        }

        if let WeightSchedule::Chaotic { map, ws } = &mut self.schedule {
            *ws = map.next_value();
        }
        self.epoch += 1;
        Ok(())
    }
}

/// Initializes a population and runs `config.epochs` epochs.
pub fn run<F>(
    objective: F,
    bounds: &Bounds,
    config: &OptimizerConfig,
) -> Result<RunRecord, FdoError>
where
    F: Fn(&[f64]) -> f64,
{
    let mut state = OptimizerState::initialize(&objective, bounds, config)?;
    let initial_best_fitness = state.global_best.fitness;
    let mut trace = Vec::with_capacity(config.epochs);
    for _ in 0..config.epochs {
        state.step_epoch(&objective, bounds, config)?;
        trace.push(state.global_best.fitness);
    }
    Ok(RunRecord {
        initial_best_fitness,
        trace,
        best_position: state.global_best.position,
        best_fitness: state.global_best.fitness,
        evaluations: state.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdo::{Direction, Initializer};

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    fn square(d: usize, half: f64) -> Bounds {
        Bounds::new(vec![-half; d], vec![half; d]).unwrap()
    }

    #[test]
    fn zero_epochs_reports_initial_best() {
        let cfg = OptimizerConfig::standard().with_epochs(0).with_seed(9);
        let record = run(sphere, &square(3, 5.0), &cfg).unwrap();
        assert!(record.trace.is_empty());
        assert_eq!(record.best_fitness, record.initial_best_fitness);
        assert_eq!(record.evaluations, 50);
    }

    #[test]
    fn constant_objective_never_moves() {
        let cfg = OptimizerConfig::standard().with_epochs(20).with_seed(2);
        let bounds = square(2, 1.0);
        let mut state = OptimizerState::initialize(&|_: &[f64]| 4.0, &bounds, &cfg).unwrap();
        let start: Vec<_> = state.agents.iter().map(|a| a.position.clone()).collect();
        for _ in 0..20 {
            state.step_epoch(&|_: &[f64]| 4.0, &bounds, &cfg).unwrap();
        }
        assert_eq!(state.global_best.fitness, 4.0);
        let end: Vec<_> = state.agents.iter().map(|a| a.position.clone()).collect();
        assert_eq!(start, end);
    }

    #[test]
    fn non_finite_objective_is_an_error() {
        let cfg = OptimizerConfig::standard().with_epochs(1);
        let err = run(|_: &[f64]| f64::NAN, &square(1, 1.0), &cfg).unwrap_err();
        assert!(matches!(err, FdoError::NonFiniteObjective { .. }));
    }

    #[test]
    fn chaotic_weight_stays_in_range() {
        let cfg = OptimizerConfig::enhanced().with_epochs(0);
        let bounds = square(2, 1.0);
        let mut state = OptimizerState::initialize(&sphere, &bounds, &cfg).unwrap();
        for _ in 0..30 {
            let ws = state.weight_factor();
            assert!((0.0..=0.075).contains(&ws), "{ws}");
            state.step_epoch(&sphere, &bounds, &cfg).unwrap();
        }
    }

    #[test]
    fn agents_cache_their_fitness() {
        let cfg = OptimizerConfig::enhanced().with_seed(5);
        let bounds = square(4, 3.0);
        let mut state = OptimizerState::initialize(&sphere, &bounds, &cfg).unwrap();
        for _ in 0..25 {
            state.step_epoch(&sphere, &bounds, &cfg).unwrap();
        }
        for agent in &state.agents {
            assert_eq!(agent.fitness, sphere(&agent.position));
            assert!(agent.pace.iter().all(|p| p.is_finite()));
        }
        assert_eq!(state.epoch, 25);
    }

    #[test]
    fn maximization_climbs() {
        let cfg = OptimizerConfig {
            direction: Direction::Maximize,
            initializer: Initializer::Sobol,
            epochs: 100,
            ..OptimizerConfig::standard()
        };
        let bounds = square(2, 2.0);
        let record = run(|x: &[f64]| 10.0 - sphere(x), &bounds, &cfg).unwrap();
        assert!(record.best_fitness > 9.99, "{}", record.best_fitness);
        assert!(record.trace.windows(2).all(|w| w[1] >= w[0]));
    }
}
