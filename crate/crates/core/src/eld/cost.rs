use super::{check_len, EldError, GeneratorUnit};

/// Total fuel cost in $.
pub fn fuel_cost(units: &[GeneratorUnit], powers: &[f64]) -> Result<f64, EldError> {
    check_len(units.len(), powers.len())?;
    Ok(units.iter().zip(powers).map(|(u, p)| u.fuel_cost(*p)).sum())
}

/// Total emission in lb.
pub fn emission(units: &[GeneratorUnit], powers: &[f64]) -> Result<f64, EldError> {
    check_len(units.len(), powers.len())?;
    Ok(units.iter().zip(powers).map(|(u, p)| u.emission(*p)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit1() -> GeneratorUnit {
        GeneratorUnit::with_fuel_as_emission(7.0, 85.74158, 0.602842, 22.45526, 85.74158)
    }

    #[test]
    fn fuel_cost_examples() {
        assert_eq!(fuel_cost(&[unit1()], &[0.0]).unwrap(), 85.74158);
        assert!((fuel_cost(&[unit1()], &[10.0]).unwrap() - 370.57838).abs() < 1e-9);
        let two = fuel_cost(&[unit1(), unit1()], &[12.5, 12.5]).unwrap();
        assert_eq!(two, 2.0 * fuel_cost(&[unit1()], &[12.5]).unwrap());
    }

    #[test]
    fn emission_examples() {
        let units = [
            GeneratorUnit { ec: 3.0, ..unit1() },
            GeneratorUnit { ec: 4.5, ..unit1() },
        ];
        assert_eq!(emission(&units, &[0.0, 0.0]).unwrap(), 7.5);

        let pure = GeneratorUnit {
            ea: 1.0,
            eb: 0.0,
            ec: 0.0,
            ..unit1()
        };
        assert_eq!(emission(&[pure], &[5.0]).unwrap(), 25.0);
    }

    #[test]
    fn emission_matches_termwise_sum() {
        let units = [
            GeneratorUnit {
                ea: 0.0042,
                eb: -0.31,
                ec: 13.8,
                ..unit1()
            },
            GeneratorUnit {
                ea: 0.0065,
                eb: -0.55,
                ec: 40.3,
                ..unit1()
            },
            GeneratorUnit {
                ea: 0.0039,
                eb: -0.41,
                ec: 42.9,
                ..unit1()
            },
        ];
        let p = [31.0, 54.25, 18.5];
        let mut expected = 0.0;
        for (u, p) in units.iter().zip(p) {
            expected += u.ea * p * p;
            expected += u.eb * p;
            expected += u.ec;
        }
        assert!((emission(&units, &p).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            fuel_cost(&[unit1()], &[1.0, 2.0]),
            Err(EldError::LengthMismatch {
                expected: 1,
                got: 2
            })
        );
        assert!(emission(&[unit1(), unit1()], &[1.0]).is_err());
    }
}
