//! A reduced experiment matrix written to a report directory.
//!
//! `cargo run --release --example experiment_matrix -- out/`

use fdo_eld::bench::{emit_reports, run_experiments, ExperimentSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "matrix-out".into());
    let spec = ExperimentSpec {
        epochs_list: vec![100],
        seeds: (1..=5).collect(),
        ..ExperimentSpec::defaults(
            concat!(env!("CARGO_MANIFEST_DIR"), "/data/units24.dat"),
            &out,
        )
    };
    let table = run_experiments(&spec)?;
    for cell in &table.cells {
        let k = cell.key;
        match &cell.outcome {
            Ok(s) => println!(
                "{:>8} {:>5} MW {:>3} ep chunk {}: FC {:.2} $, median |residual| {:.1e} MW",
                k.variant.label(),
                k.demand,
                k.epochs,
                k.chunk,
                s.representative().solution.fuel_cost,
                s.median_balance_residual
            ),
            Err(e) => println!("{:?}: {e}", k),
        }
    }
    let files = emit_reports(&table, &out)?;
    println!("{} files in {out}", files.len());
    Ok(())
}
