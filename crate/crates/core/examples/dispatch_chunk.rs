//! CEED dispatch of one dataset chunk with both optimizer variants.
//!
//! `cargo run --example dispatch_chunk -- 1 400`

use fdo_eld::bench::{load_dataset, Variant};
use fdo_eld::eld::DispatchProblem;
use fdo_eld::fdo::run;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let chunk: usize = args.next().map_or(Ok(1), |a| a.parse())?;
    let demand: f64 = args.next().map_or(Ok(400.0), |a| a.parse())?;

    let ds = load_dataset(concat!(env!("CARGO_MANIFEST_DIR"), "/data/units24.dat"))?;
    let problem =
        DispatchProblem::ceed(ds.chunk_units(chunk - 1).to_vec(), ds.loss.clone(), demand)?;
    println!(
        "chunk {chunk}, demand {demand} MW, mode {:?}",
        problem.mode()
    );

    for variant in [Variant::StandardFdo, Variant::EnhancedFdo] {
        let rec = run(
            problem.objective(),
            &problem.bounds(),
            &variant.config(50, 100, 1),
        )?;
        let sol = problem.solution(&rec.best_position)?;
        println!("{}:", variant.label());
        for (i, p) in sol.powers.iter().enumerate() {
            println!("  P{} = {p:.5} MW", i + 1);
        }
        println!(
            "  fuel {:.3} $, emission {:.3} lb, loss {:.4} MW, residual {:.2e} MW",
            sol.fuel_cost, sol.emission, sol.loss, sol.balance_residual
        );
    }
    Ok(())
}
