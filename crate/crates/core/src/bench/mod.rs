//! Experiment harness: dataset ingestion, the variant x demand x epochs x
//! chunk x seed matrix, one-way ANOVA and CSV/JSON reports.

mod anova;
mod dataset;
mod experiment;
mod report;

pub use anova::{one_way_anova, AnovaError};
pub use dataset::{load_dataset, Dataset, DatasetError};
pub use experiment::{
    run_experiments, run_with_dataset, solve_cell, AnovaRow, CellKey, CellResult, CellSummary,
    ExperimentSpec, ResultTable, SeedRecord, Variant,
};
pub use report::{emit_reports, trace_file_name};

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error("invalid experiment spec: {0}")]
    Spec(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}
