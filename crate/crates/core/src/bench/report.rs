//! Report files.
//!
//! | file | columns |
//! |------|---------|
//! | `results.csv` | `variant,demand,epochs,chunk,unit,mean_power,representative_power` |
//! | `summary.json` | `{"cells": [..]}`, one object per cell, see [`CellReport`] |
//! | `trace_<variant>_<demand>_<epochs>_<chunk>.csv` | `epoch,best_fitness` (representative seed) |
//! | `anova.csv` | `demand,epochs,chunk,standard_n,enhanced_n,f_statistic,status` |
//!
//! Numbers use Rust's shortest round-trip formatting with `.` as decimal
//! separator; every line ends with `\n`. Failed cells appear only in
//! `summary.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{BenchError, CellKey, ResultTable};
use crate::bench::AnovaError;

#[derive(Serialize)]
struct SeedReport {
    seed: u64,
    best_fitness: f64,
    fuel_cost: f64,
    emission: f64,
    transmission_loss: f64,
    balance_residual: f64,
}

/// Per-cell entry of `summary.json`. Totals refer to the representative
/// (median-fitness) seed.
#[derive(Serialize)]
struct CellReport {
    variant: &'static str,
    demand: f64,
    epochs: usize,
    chunk: usize,
    status: &'static str,
    error: Option<String>,
    penalty_factor: Option<f64>,
    emission_limit: Option<f64>,
    representative_seed: Option<u64>,
    best_fitness: Option<f64>,
    allocation: Vec<f64>,
    fuel_cost: Option<f64>,
    emission: Option<f64>,
    transmission_loss: Option<f64>,
    balance_residual: Option<f64>,
    median_best_fitness: Option<f64>,
    median_balance_residual: Option<f64>,
    seeds: Vec<SeedReport>,
}

#[derive(Serialize)]
struct Summary {
    cells: Vec<CellReport>,
}

pub fn trace_file_name(key: &CellKey) -> String {
    format!(
        "trace_{}_{}_{}_{}.csv",
        key.variant.label(),
        key.demand,
        key.epochs,
        key.chunk
    )
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>, BenchError> {
    let file = fs::File::create(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(file))
}

fn write_rows(path: &Path, header: &[&str], rows: Vec<Vec<String>>) -> Result<(), BenchError> {
    let wrap = |source| BenchError::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut w = csv_writer(path)?;
    w.write_record(header).map_err(wrap)?;
    for row in rows {
        w.write_record(&row).map_err(wrap)?;
    }
    w.flush().map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes every report file into `output_dir`, creating it if needed, and
/// returns the written paths.
pub fn emit_reports(
    table: &ResultTable,
    output_dir: impl AsRef<Path>,
) -> Result<Vec<PathBuf>, BenchError> {
    let dir = output_dir.as_ref();
    fs::create_dir_all(dir).map_err(|source| BenchError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::new();

    let mut result_rows = Vec::new();
    let mut cells = Vec::new();
    for cell in &table.cells {
        let key = &cell.key;
        let mut report = CellReport {
            variant: key.variant.label(),
            demand: key.demand,
            epochs: key.epochs,
            chunk: key.chunk,
            status: "ok",
            error: None,
            penalty_factor: None,
            emission_limit: None,
            representative_seed: None,
            best_fitness: None,
            allocation: Vec::new(),
            fuel_cost: None,
            emission: None,
            transmission_loss: None,
            balance_residual: None,
            median_best_fitness: None,
            median_balance_residual: None,
            seeds: Vec::new(),
        };
        match &cell.outcome {
            Err(e) => {
                report.status = "failed";
                report.error = Some(e.clone());
            }
            Ok(summary) => {
                let rep = summary.representative();
                match summary.mode {
                    crate::eld::DispatchMode::Ceed { penalty_b } => {
                        report.penalty_factor = Some(penalty_b)
                    }
                    crate::eld::DispatchMode::Eced { e_limit } => {
                        report.emission_limit = Some(e_limit)
                    }
                }
                report.representative_seed = Some(rep.seed);
                report.best_fitness = Some(rep.run.best_fitness);
                report.allocation = rep.solution.powers.clone();
                report.fuel_cost = Some(rep.solution.fuel_cost);
                report.emission = Some(rep.solution.emission);
                report.transmission_loss = Some(rep.solution.loss);
                report.balance_residual = Some(rep.solution.balance_residual);
                report.median_best_fitness = Some(summary.median_best_fitness);
                report.median_balance_residual = Some(summary.median_balance_residual);
                report.seeds = summary
                    .runs
                    .iter()
                    .map(|r| SeedReport {
                        seed: r.seed,
                        best_fitness: r.run.best_fitness,
                        fuel_cost: r.solution.fuel_cost,
                        emission: r.solution.emission,
                        transmission_loss: r.solution.loss,
                        balance_residual: r.solution.balance_residual,
                    })
                    .collect();

                for (i, id) in summary.unit_ids.iter().enumerate() {
                    result_rows.push(vec![
                        key.variant.label().to_string(),
                        key.demand.to_string(),
                        key.epochs.to_string(),
                        key.chunk.to_string(),
                        id.to_string(),
                        summary.mean_allocation[i].to_string(),
                        rep.solution.powers[i].to_string(),
                    ]);
                }

                let path = dir.join(trace_file_name(key));
                let rows = rep
                    .run
                    .trace
                    .iter()
                    .enumerate()
                    .map(|(e, f)| vec![(e + 1).to_string(), f.to_string()])
                    .collect();
                write_rows(&path, &["epoch", "best_fitness"], rows)?;
                written.push(path);
            }
        }
        cells.push(report);
    }

    let path = dir.join("results.csv");
    write_rows(
        &path,
        &[
            "variant",
            "demand",
            "epochs",
            "chunk",
            "unit",
            "mean_power",
            "representative_power",
        ],
        result_rows,
    )?;
    written.push(path);

    let path = dir.join("summary.json");
    let mut json =
        serde_json::to_string_pretty(&Summary { cells }).map_err(|source| BenchError::Json {
            path: path.clone(),
            source,
        })?;
    json.push('\n');
    fs::write(&path, json).map_err(|source| BenchError::Io {
        path: path.clone(),
        source,
    })?;
    written.push(path);

    let path = dir.join("anova.csv");
    let rows = table
        .anova_rows()
        .into_iter()
        .map(|r| {
            let (f, status) = match r.f_statistic {
                Ok(f) => (f.to_string(), "ok".to_string()),
                Err(AnovaError::InfiniteF) => {
                    ("inf".to_string(), "zero_within_variance".to_string())
                }
                Err(e) => (String::new(), e.to_string()),
            };
            vec![
                r.demand.to_string(),
                r.epochs.to_string(),
                r.chunk.to_string(),
                r.standard_n.to_string(),
                r.enhanced_n.to_string(),
                f,
                status,
            ]
        })
        .collect();
    write_rows(
        &path,
        &[
            "demand",
            "epochs",
            "chunk",
            "standard_n",
            "enhanced_n",
            "f_statistic",
            "status",
        ],
        rows,
    )?;
    written.push(path);

    Ok(written)
}
