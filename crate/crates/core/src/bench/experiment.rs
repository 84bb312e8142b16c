use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{load_dataset, one_way_anova, AnovaError, BenchError, Dataset};
use crate::eld::{DispatchMode, DispatchProblem, DispatchSolution};
use crate::fdo::{self, OptimizerConfig, RunRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Uniform initialization, constant weight factor 0.
    StandardFdo,
    /// Sobol initialization, sine-map weight factor (m = 0.3).
    EnhancedFdo,
}

impl Variant {
    pub fn label(self) -> &'static str {
        match self {
            Variant::StandardFdo => "standard",
            Variant::EnhancedFdo => "enhanced",
        }
    }

    pub fn config(self, population: usize, epochs: usize, seed: u64) -> OptimizerConfig {
        let base = match self {
            Variant::StandardFdo => OptimizerConfig::standard(),
            Variant::EnhancedFdo => OptimizerConfig::enhanced(),
        };
        base.with_population(population)
            .with_epochs(epochs)
            .with_seed(seed)
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "standard" | "fdo" => Ok(Variant::StandardFdo),
            "enhanced" | "efdo" => Ok(Variant::EnhancedFdo),
            other => Err(format!("unknown variant `{other}` (standard | enhanced)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub dataset_path: PathBuf,
    pub demands: Vec<f64>,
    pub epochs_list: Vec<usize>,
    pub population: usize,
    pub variants: Vec<Variant>,
    pub seeds: Vec<u64>,
    pub output_dir: PathBuf,
    /// Switches every cell to emission-capped dispatch.
    pub e_limit: Option<f64>,
}

impl ExperimentSpec {
    /// 400/700 MW, 100/200 epochs, 50 scouts, both variants, seeds 1..=20.
    pub fn defaults(dataset_path: impl Into<PathBuf>, output_dir: impl Into<PathBuf>) -> Self {
        Self {
            dataset_path: dataset_path.into(),
            demands: vec![400.0, 700.0],
            epochs_list: vec![100, 200],
            population: 50,
            variants: vec![Variant::StandardFdo, Variant::EnhancedFdo],
            seeds: (1..=20).collect(),
            output_dir: output_dir.into(),
            e_limit: None,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let bad = |m: &str| Err(BenchError::Spec(m.into()));
        if self.demands.is_empty()
            || self.epochs_list.is_empty()
            || self.variants.is_empty()
            || self.seeds.is_empty()
        {
            return bad("demands, epochs, variants and seeds must be non-empty");
        }
        if self.population == 0 {
            return bad("population must be positive");
        }
        let mut seeds = self.seeds.clone();
        seeds.sort_unstable();
        if seeds.windows(2).any(|w| w[0] == w[1]) {
            return bad("seeds must be distinct");
        }
        if self.demands.iter().any(|d| !(d.is_finite() && *d > 0.0)) {
            return bad("demands must be positive");
        }
        Ok(())
    }
}

/// One cell of the matrix. `chunk` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellKey {
    pub variant: Variant,
    pub demand: f64,
    pub epochs: usize,
    pub chunk: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub seed: u64,
    pub run: RunRecord,
    pub solution: DispatchSolution,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    /// 1-based dataset ids of the chunk's units.
    pub unit_ids: Vec<usize>,
    pub mode: DispatchMode,
    pub runs: Vec<SeedRecord>,
    /// Index into `runs` of the median-fitness seed.
    pub representative: usize,
    pub mean_allocation: Vec<f64>,
    pub median_best_fitness: f64,
    pub median_balance_residual: f64,
}

impl CellSummary {
    pub fn representative(&self) -> &SeedRecord {
        &self.runs[self.representative]
    }

    pub fn best_fitnesses(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.run.best_fitness).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub key: CellKey,
    pub outcome: Result<CellSummary, String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ResultTable {
    pub cells: Vec<CellResult>,
}

/// Standard-vs-enhanced comparison of final best fitness for one
/// (demand, epochs, chunk).
#[derive(Debug, Clone, PartialEq)]
pub struct AnovaRow {
    pub demand: f64,
    pub epochs: usize,
    pub chunk: usize,
    pub standard_n: usize,
    pub enhanced_n: usize,
    pub f_statistic: Result<f64, AnovaError>,
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

fn build_problem(
    dataset: &Dataset,
    key: &CellKey,
    e_limit: Option<f64>,
) -> Result<DispatchProblem, String> {
    let units = dataset.chunk_units(key.chunk - 1).to_vec();
    let problem = match e_limit {
        Some(limit) => DispatchProblem::new(
            units,
            dataset.loss.clone(),
            key.demand,
            DispatchMode::Eced { e_limit: limit },
        ),
        None => DispatchProblem::ceed(units, dataset.loss.clone(), key.demand),
    };
    problem.map_err(|e| e.to_string())
}

fn run_seed(
    problem: &DispatchProblem,
    key: &CellKey,
    population: usize,
    seed: u64,
) -> Result<SeedRecord, String> {
    let config = key.variant.config(population, key.epochs, seed);
    let run = fdo::run(problem.objective(), &problem.bounds(), &config)
        .map_err(|e| format!("seed {seed}: {e}"))?;
    let solution = problem
        .solution(&run.best_position)
        .map_err(|e| format!("seed {seed}: {e}"))?;
    Ok(SeedRecord {
        seed,
        run,
        solution,
    })
}

fn summarize(
    dataset: &Dataset,
    key: &CellKey,
    problem: &DispatchProblem,
    runs: Vec<SeedRecord>,
) -> CellSummary {
    let dim = problem.dim();
    let n = runs.len() as f64;
    let mut mean_allocation = vec![0.0; dim];
    for r in &runs {
        for (m, p) in mean_allocation.iter_mut().zip(&r.solution.powers) {
            *m += p;
        }
    }
    mean_allocation.iter_mut().for_each(|m| *m /= n);

    let mut order: Vec<usize> = (0..runs.len()).collect();
    order.sort_by(|&i, &j| {
        runs[i]
            .run
            .best_fitness
            .total_cmp(&runs[j].run.best_fitness)
            .then(runs[i].seed.cmp(&runs[j].seed))
    });
    let representative = order[(order.len() - 1) / 2];

    let mut fitness: Vec<f64> = runs.iter().map(|r| r.run.best_fitness).collect();
    let mut residual: Vec<f64> = runs
        .iter()
        .map(|r| r.solution.balance_residual.abs())
        .collect();
    CellSummary {
        unit_ids: dataset.chunks[key.chunk - 1]
            .clone()
            .map(|i| i + 1)
            .collect(),
        mode: problem.mode(),
        median_best_fitness: median(&mut fitness),
        median_balance_residual: median(&mut residual),
        runs,
        representative,
        mean_allocation,
    }
}

/// Runs `seeds` for one cell.
pub fn solve_cell(
    dataset: &Dataset,
    key: CellKey,
    population: usize,
    seeds: &[u64],
    e_limit: Option<f64>,
) -> Result<CellSummary, String> {
    if key.chunk == 0 || key.chunk > dataset.chunks.len() {
        return Err(format!(
            "chunk {} outside 1..={}",
            key.chunk,
            dataset.chunks.len()
        ));
    }
    let problem = build_problem(dataset, &key, e_limit)?;
    let runs = seeds
        .par_iter()
        .map(|&seed| run_seed(&problem, &key, population, seed))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(summarize(dataset, &key, &problem, runs))
}

/// Runs the full matrix against an already loaded dataset.
///
/// Cells are ordered variant, demand, epochs, chunk, each in the order of
/// the `ExperimentSpec` lists; a failing cell is recorded and does not stop the others.
pub fn run_with_dataset(
    spec: &ExperimentSpec,
    dataset: &Dataset,
) -> Result<ResultTable, BenchError> {
    spec.validate()?;
    let mut keys = Vec::new();
    for &variant in &spec.variants {
        for &demand in &spec.demands {
            for &epochs in &spec.epochs_list {
                for chunk in 1..=dataset.chunks.len() {
                    keys.push(CellKey {
                        variant,
                        demand,
                        epochs,
                        chunk,
                    });
                }
            }
        }
    }
    let cells = keys
        .par_iter()
        .map(|key| CellResult {
            key: *key,
            outcome: solve_cell(dataset, *key, spec.population, &spec.seeds, spec.e_limit),
        })
        .collect();
    Ok(ResultTable { cells })
}

pub fn run_experiments(spec: &ExperimentSpec) -> Result<ResultTable, BenchError> {
    spec.validate()?;
    let dataset = load_dataset(&spec.dataset_path)?;
    run_with_dataset(spec, &dataset)
}

impl ResultTable {
    pub fn failures(&self) -> impl Iterator<Item = (&CellKey, &str)> {
        self.cells
            .iter()
            .filter_map(|c| c.outcome.as_ref().err().map(|e| (&c.key, e.as_str())))
    }

    pub fn cell(
        &self,
        variant: Variant,
        demand: f64,
        epochs: usize,
        chunk: usize,
    ) -> Option<&CellResult> {
        self.cells.iter().find(|c| {
            c.key
                == CellKey {
                    variant,
                    demand,
                    epochs,
                    chunk,
                }
        })
    }

    /// One row per (demand, epochs, chunk) where both variants succeeded.
    pub fn anova_rows(&self) -> Vec<AnovaRow> {
        let mut rows = Vec::new();
        for cell in &self.cells {
            let key = cell.key;
            if key.variant != Variant::StandardFdo {
                continue;
            }
            let Ok(standard) = &cell.outcome else {
                continue;
            };
            let Some(CellResult {
                outcome: Ok(enhanced),
                ..
            }) = self.cell(Variant::EnhancedFdo, key.demand, key.epochs, key.chunk)
            else {
                continue;
            };
            let groups = [standard.best_fitnesses(), enhanced.best_fitnesses()];
            rows.push(AnovaRow {
                demand: key.demand,
                epochs: key.epochs,
                chunk: key.chunk,
                standard_n: groups[0].len(),
                enhanced_n: groups[1].len(),
                f_statistic: one_way_anova(&groups),
            });
        }
        rows
    }
}
