//! Standard and enhanced FDO on two analytic problems.
//!
//! `cargo run --example analytic`

use fdo_eld::fdo::{run, Bounds, OptimizerConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sphere = |x: &[f64]| (x[0] - 1.234).powi(2) + (x[1] + 0.5).powi(2);
    let rosenbrock = |x: &[f64]| {
        x.windows(2)
            .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
            .sum::<f64>()
    };

    for (name, config) in [
        ("standard", OptimizerConfig::standard()),
        ("enhanced", OptimizerConfig::enhanced()),
    ] {
        let config = config.with_epochs(200).with_seed(42);
        let rec = run(sphere, &Bounds::new(vec![-5.0; 2], vec![5.0; 2])?, &config)?;
        println!(
            "{name:>8} shifted sphere best {:.3e} at {:.4?}",
            rec.best_fitness, rec.best_position
        );
        let rec = run(
            rosenbrock,
            &Bounds::new(vec![-2.0; 4], vec![2.0; 4])?,
            &config,
        )?;
        println!(
            "{name:>8} rosenbrock best {:.3e} after {} evaluations (start {:.3e})",
            rec.best_fitness, rec.evaluations, rec.initial_best_fitness
        );
    }
    Ok(())
}
