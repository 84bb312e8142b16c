use super::{EldError, GeneratorUnit};

/// Per-unit ratio of fuel cost to emission at full output, in $/lb.
pub fn penalty_ratios(units: &[GeneratorUnit]) -> Result<Vec<f64>, EldError> {
    units
        .iter()
        .enumerate()
        .map(|(index, u)| {
            let e = u.emission(u.p_max);
            if e == 0.0 {
                Err(EldError::ZeroEmission { index })
            } else {
                Ok(u.fuel_cost(u.p_max) / e)
            }
        })
        .collect()
}

/// Price penalty factor for `demand`.
///
/// Units are ranked by ascending [`penalty_ratios`] and their capacities
/// accumulated until they cover the demand; the ratio of the unit that
/// closes the gap is the factor.
pub fn price_penalty_factor(units: &[GeneratorUnit], demand: f64) -> Result<f64, EldError> {
    let capacity: f64 = units.iter().map(|u| u.p_max).sum();
    if units.is_empty() || capacity < demand {
        return Err(EldError::Infeasible { demand, capacity });
    }
    let ratios = penalty_ratios(units)?;
    let mut order: Vec<usize> = (0..units.len()).collect();
    order.sort_by(|&i, &j| ratios[i].total_cmp(&ratios[j]));

    let mut covered = 0.0;
    for i in order {
        covered += units[i].p_max;
        if covered >= demand {
            return Ok(ratios[i]);
        }
    }
    // Summation order can leave `covered` a rounding error short of `capacity`.
    Ok(ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max))
}
