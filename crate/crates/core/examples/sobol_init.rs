//! Sobol versus uniform starting populations, compared by centered L2
//! discrepancy.
//!
//! `cargo run --example sobol_init -- 6 50`

use fdo_eld::fdo::{Bounds, Initializer};
use fdo_eld::init::{centered_l2_discrepancy, initialize_population, SobolGenerator};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dim: usize = args.next().map_or(Ok(6), |a| a.parse())?;
    let pop: usize = args.next().map_or(Ok(50), |a| a.parse())?;

    let mut gen = SobolGenerator::new(dim)?;
    println!("first points in {dim}-D:");
    for _ in 0..4 {
        println!("  {:?}", gen.next_point()?);
    }

    let unit = Bounds::new(vec![0.0; dim], vec![1.0; dim])?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let sobol = initialize_population(pop, &unit, Initializer::Sobol, &mut rng)?;
    let uniform = initialize_population(pop, &unit, Initializer::Uniform, &mut rng)?;
    println!(
        "CD^2 of {pop} points: sobol {:.5}, uniform {:.5}",
        centered_l2_discrepancy(&sobol),
        centered_l2_discrepancy(&uniform)
    );
    Ok(())
}
