use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AnovaError {
    #[error("one-way ANOVA needs at least two groups")]
    TooFewGroups,
    #[error("group {0} has fewer than two samples")]
    TooFewSamples(usize),
    #[error("within-group variance is zero; F is unbounded")]
    InfiniteF,
}

/// One-way ANOVA F statistic: between-group mean square over within-group
/// mean square.
pub fn one_way_anova(groups: &[Vec<f64>]) -> Result<f64, AnovaError> {
    if groups.len() < 2 {
        return Err(AnovaError::TooFewGroups);
    }
    if let Some(i) = groups.iter().position(|g| g.len() < 2) {
        return Err(AnovaError::TooFewSamples(i));
    }
    let k = groups.len() as f64;
    let n: usize = groups.iter().map(Vec::len).sum();
    let grand = groups.iter().flatten().sum::<f64>() / n as f64;

    let mut ssb = 0.0;
    let mut ssw = 0.0;
    for g in groups {
        let mean = g.iter().sum::<f64>() / g.len() as f64;
        ssb += g.len() as f64 * (mean - grand).powi(2);
        ssw += g.iter().map(|x| (x - mean).powi(2)).sum::<f64>();
    }
    if ssw == 0.0 {
        return Err(AnovaError::InfiniteF);
    }
    Ok((ssb / (k - 1.0)) / (ssw / (n as f64 - k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_three_groups() {
        let f = one_way_anova(&[
            vec![1.0, 2.0, 3.0],
            vec![4.0, 5.0, 6.0],
            vec![7.0, 8.0, 9.0],
        ])
        .unwrap();
        assert!((f - 27.0).abs() < 1e-12);
    }

    #[test]
    fn identical_groups_give_zero() {
        let g = vec![1.0, 2.0, 3.0];
        assert_eq!(one_way_anova(&[g.clone(), g]).unwrap(), 0.0);
    }

    #[test]
    fn errors() {
        assert_eq!(
            one_way_anova(&[vec![1.0, 2.0]]),
            Err(AnovaError::TooFewGroups)
        );
        assert_eq!(
            one_way_anova(&[vec![1.0, 2.0], vec![3.0]]),
            Err(AnovaError::TooFewSamples(1))
        );
        assert_eq!(
            one_way_anova(&[vec![1.0, 1.0], vec![3.0, 3.0]]),
            Err(AnovaError::InfiniteF)
        );
    }
}
