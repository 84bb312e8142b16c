/// Squared centered L2 discrepancy of a point set in `[0, 1]^D`.
///
/// Lower is more uniform. Returns 0 for an empty set.
pub fn centered_l2_discrepancy(points: &[Vec<f64>]) -> f64 {
    let n = points.len();
    if n == 0 {
        return 0.0;
    }
    let d = points[0].len() as i32;
    let nf = n as f64;

    let single: f64 = points
        .iter()
        .map(|p| {
            p.iter()
                .map(|&x| {
                    let c = (x - 0.5).abs();
                    1.0 + 0.5 * c - 0.5 * c * c
                })
                .product::<f64>()
        })
        .sum();

    let mut pair = 0.0;
    for p in points {
        for q in points {
            pair += p
                .iter()
                .zip(q)
                .map(|(&x, &y)| {
                    1.0 + 0.5 * (x - 0.5).abs() + 0.5 * (y - 0.5).abs() - 0.5 * (x - y).abs()
                })
                .product::<f64>();
        }
    }

    (13.0f64 / 12.0).powi(d) - 2.0 / nf * single + pair / (nf * nf)
}
