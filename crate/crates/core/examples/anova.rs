//! One-way ANOVA over final best fitness of the two variants on a
//! shifted multimodal function (the Sobol start includes the box centre, so
//! an unshifted optimum would be found at initialization).
//!
//! `cargo run --example anova`

use fdo_eld::bench::{one_way_anova, Variant};
use fdo_eld::fdo::{run, Bounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rastrigin = |x: &[f64]| {
        x.iter()
            .map(|v| v - 1.3)
            .map(|v| v * v - 10.0 * (std::f64::consts::TAU * v).cos() + 10.0)
            .sum::<f64>()
    };
    let bounds = Bounds::new(vec![-5.12; 5], vec![5.12; 5])?;
    let mut groups = Vec::new();
    for variant in [Variant::StandardFdo, Variant::EnhancedFdo] {
        let finals = (1..=20)
            .map(|seed| {
                run(rastrigin, &bounds, &variant.config(30, 100, seed)).map(|r| r.best_fitness)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mean = finals.iter().sum::<f64>() / finals.len() as f64;
        println!("{:>8}: mean final fitness {mean:.4}", variant.label());
        groups.push(finals);
    }
    println!("F = {:.4}", one_way_anova(&groups)?);
    println!(
        "textbook check (1,2,3),(4,5,6),(7,8,9): F = {}",
        one_way_anova(&[vec![1., 2., 3.], vec![4., 5., 6.], vec![7., 8., 9.]])?
    );
    Ok(())
}
