//! Emission-capped dispatch: tighten the cap and watch fuel cost rise.
//!
//! `cargo run --example eced`

use fdo_eld::eld::{DispatchMode, DispatchProblem, GeneratorUnit, LossMatrix};
use fdo_eld::fdo::{run, OptimizerConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let units = vec![
        GeneratorUnit {
            p_min: 10.0,
            p_max: 150.0,
            a: 0.008,
            b: 7.0,
            c: 200.0,
            ea: 0.0012,
            eb: 0.3,
            ec: 10.0,
        },
        GeneratorUnit {
            p_min: 10.0,
            p_max: 120.0,
            a: 0.009,
            b: 6.3,
            c: 180.0,
            ea: 0.0016,
            eb: 0.25,
            ec: 12.0,
        },
        GeneratorUnit {
            p_min: 10.0,
            p_max: 100.0,
            a: 0.007,
            b: 6.8,
            c: 140.0,
            ea: 0.0010,
            eb: 0.35,
            ec: 8.0,
        },
    ];
    let loss = LossMatrix::quadratic(vec![
        vec![2.18e-4, 0.93e-4, 0.28e-4],
        vec![0.93e-4, 2.28e-4, 0.17e-4],
        vec![0.28e-4, 0.17e-4, 1.79e-4],
    ])?;
    // The emission floor of this system is about 108.83 lb at 200 MW.
    for limit in [f64::INFINITY, 109.5, 109.2, 109.0] {
        let problem = DispatchProblem::new(
            units.clone(),
            loss.clone(),
            200.0,
            DispatchMode::Eced { e_limit: limit },
        )?;
        let rec = run(
            problem.objective(),
            &problem.bounds(),
            &OptimizerConfig::enhanced().with_seed(3),
        )?;
        let sol = problem.solution(&rec.best_position)?;
        println!(
            "limit {limit:>6}: fuel {:.3} $, emission {:.3} lb, P = {:.3?}",
            sol.fuel_cost, sol.emission, sol.powers
        );
    }
    Ok(())
}
