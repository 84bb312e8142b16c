use super::{check_len, transmission_loss, DispatchProblem, EldError};

pub const MAX_REPAIR_ITERATIONS: usize = 100;

/// Projects `raw_powers` onto the unit limits and the power-balance equation.
///
/// After clamping to `[p_min, p_max]`, the balance residual
/// `sum(P) - loss(P) - demand` is removed in proportion to each unit's
/// headroom in the needed direction (`P - p_min` for a surplus, `p_max - P`
/// for a deficit), re-clamped, and re-evaluated with the updated loss until
/// `|residual| <= balance_tolerance`.
///
/// On failure, [`EldError::NonConvergent`] carries the last iterate, which
/// is still within the unit limits.
pub fn repair(problem: &DispatchProblem, raw_powers: &[f64]) -> Result<Vec<f64>, EldError> {
    let units = problem.units();
    check_len(units.len(), raw_powers.len())?;
    let mut p: Vec<f64> = raw_powers
        .iter()
        .zip(units)
        .map(|(x, u)| x.clamp(u.p_min, u.p_max))
        .collect();

    let mut residual = f64::NAN;
    for _ in 0..=MAX_REPAIR_ITERATIONS {
        residual = problem.balance_residual(&p)?;
        if residual.abs() <= problem.balance_tolerance() {
            return Ok(p);
        }
        let headroom: Vec<f64> = p
            .iter()
            .zip(units)
            .map(|(x, u)| {
                if residual > 0.0 {
                    x - u.p_min
                } else {
                    u.p_max - x
                }
            })
            .collect();
        let total: f64 = headroom.iter().sum();
        if total <= 0.0 {
            break;
        }
        for ((x, h), u) in p.iter_mut().zip(&headroom).zip(units) {
            *x = (*x - residual * h / total).clamp(u.p_min, u.p_max);
        }
    }
    Err(EldError::NonConvergent {
        residual,
        powers: p,
    })
}

/// Residual `sum(P) - loss(P) - demand` for an arbitrary allocation.
pub(super) fn residual(problem: &DispatchProblem, powers: &[f64]) -> Result<f64, EldError> {
    let loss = transmission_loss(problem.loss(), powers)?;
    Ok(powers.iter().sum::<f64>() - loss - problem.demand())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::Dataset;
    use crate::eld::{DispatchMode, GeneratorUnit, LossMatrix};
    use proptest::prelude::*;

    fn two_units(demand: f64) -> DispatchProblem {
        let u = GeneratorUnit::with_fuel_as_emission(0.0, 100.0, 0.01, 2.0, 10.0);
        DispatchProblem::new(
            vec![u, u],
            LossMatrix::zero(2),
            demand,
            DispatchMode::Ceed { penalty_b: 1.0 },
        )
        .unwrap()
    }

    fn chunk1(demand: f64) -> DispatchProblem {
        let ds = Dataset::parse(include_str!("../../data/units24.dat")).unwrap();
        DispatchProblem::ceed(ds.chunk_units(0).to_vec(), ds.loss.clone(), demand).unwrap()
    }

    #[test]
    fn balanced_input_is_fixed_point() {
        assert_eq!(
            repair(&two_units(50.0), &[20.0, 30.0]).unwrap(),
            vec![20.0, 30.0]
        );
    }

    #[test]
    fn surplus_removed_by_headroom() {
        assert_eq!(
            repair(&two_units(50.0), &[40.0, 40.0]).unwrap(),
            vec![25.0, 25.0]
        );
        // Out-of-range input is clamped first.
        let p = repair(&two_units(150.0), &[-10.0, 400.0]).unwrap();
        assert_eq!(p, vec![50.0, 100.0]);
    }

    #[test]
    fn lossy_chunk_converges() {
        let problem = chunk1(400.0);
        for raw in [
            problem.bounds().lower().to_vec(),
            problem.bounds().upper().to_vec(),
        ] {
            let p = repair(&problem, &raw).unwrap();
            assert!(residual(&problem, &p).unwrap().abs() <= 1e-9);
        }
    }

    #[test]
    fn length_checked() {
        assert_eq!(
            repair(&two_units(50.0), &[1.0]),
            Err(EldError::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn feasible_and_idempotent(
            raw in proptest::collection::vec(-100.0f64..800.0, 6),
            demand in 150.0f64..900.0,
        ) {
            let problem = chunk1(demand);
            let p = repair(&problem, &raw).unwrap();
            prop_assert!(problem.bounds().contains(&p));
            prop_assert!(residual(&problem, &p).unwrap().abs() <= 1e-9);
            prop_assert_eq!(repair(&problem, &p).unwrap(), p);
        }
    }
}
