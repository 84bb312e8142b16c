use rand::Rng;

use super::{InitError, SobolGenerator};
use crate::fdo::{Bounds, Initializer};

/// `pop` starting positions inside `bounds`.
///
/// `Uniform` draws `pop * D` values from `rng` in agent-major order. `Sobol`
/// takes the first `pop` points after the origin and leaves `rng` untouched.
pub fn initialize_population<R: Rng + ?Sized>(
    pop: usize,
    bounds: &Bounds,
    mode: Initializer,
    rng: &mut R,
) -> Result<Vec<Vec<f64>>, InitError> {
    if pop == 0 {
        return Err(InitError::EmptyPopulation);
    }
    let dim = bounds.dim();
    match mode {
        Initializer::Uniform => Ok((0..pop)
            .map(|_| {
                let u: Vec<f64> = (0..dim).map(|_| rng.random::<f64>()).collect();
                bounds.map_unit(&u)
            })
            .collect()),
        Initializer::Sobol => {
            let mut gen = SobolGenerator::new(dim)?;
            (0..pop)
                .map(|_| Ok(bounds.map_unit(&gen.next_point()?)))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sobol_unit_square_center() {
        let bounds = Bounds::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let pop = initialize_population(1, &bounds, Initializer::Sobol, &mut rng).unwrap();
        assert_eq!(pop, vec![vec![0.5, 0.5]]);
    }

    #[test]
    fn sliver_box_holds_every_point() {
        let bounds = Bounds::new(vec![3.0, 3.0], vec![3.0001, 3.0001]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for mode in [Initializer::Uniform, Initializer::Sobol] {
            let pop = initialize_population(200, &bounds, mode, &mut rng).unwrap();
            assert!(pop.iter().all(|p| bounds.contains(p)));
        }
    }

    #[test]
    fn uniform_is_seed_deterministic() {
        let bounds = Bounds::new(vec![-1.0; 4], vec![2.0; 4]).unwrap();
        let a = initialize_population(
            10,
            &bounds,
            Initializer::Uniform,
            &mut ChaCha8Rng::seed_from_u64(8),
        )
        .unwrap();
        let b = initialize_population(
            10,
            &bounds,
            Initializer::Uniform,
            &mut ChaCha8Rng::seed_from_u64(8),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sobol_ignores_rng() {
        let bounds = Bounds::new(vec![0.0; 6], vec![5.0; 6]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let before = rng.clone();
        let a = initialize_population(50, &bounds, Initializer::Sobol, &mut rng).unwrap();
        let b = initialize_population(
            50,
            &bounds,
            Initializer::Sobol,
            &mut ChaCha8Rng::seed_from_u64(99),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(rng, before);
    }

    #[test]
    fn empty_population_rejected() {
        let bounds = Bounds::new(vec![0.0], vec![1.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(
            initialize_population(0, &bounds, Initializer::Uniform, &mut rng),
            Err(InitError::EmptyPopulation)
        );
    }
}
