//! Sobol and discrepancy checks against externally generated fixtures and an
//! independent direct-construction generator.

use std::path::Path;

use fdo_eld::fdo::Bounds;
use fdo_eld::init::{centered_l2_discrepancy, DirectionRow, SobolGenerator};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> (Option<f64>, Vec<Vec<f64>>) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    let text = std::fs::read_to_string(path).unwrap();
    let mut value = None;
    let mut rows = Vec::new();
    for line in text.lines() {
        if let Some(comment) = line.strip_prefix('#') {
            value = comment
                .rsplit_once('=')
                .and_then(|(_, v)| v.trim().parse().ok());
        } else if !line.trim().is_empty() {
            rows.push(
                line.split_whitespace()
                    .map(|v| v.parse().unwrap())
                    .collect(),
            );
        }
    }
    (value, rows)
}

/// Direction integers `v_1..v_32` for one dimension, built from the
/// recurrence without reference to the generator.
fn directions(row: Option<&DirectionRow>) -> Vec<u32> {
    let Some(row) = row else {
        return (1..=32).map(|k| 1u32 << (32 - k)).collect();
    };
    let s = row.degree as usize;
    let mut m: Vec<u64> = row.initial.iter().map(|&v| v as u64).collect();
    for k in s..32 {
        let mut next = m[k - s] ^ (m[k - s] << s);
        for j in 1..s {
            if (row.coefficients >> (s - 1 - j)) & 1 == 1 {
                next ^= m[k - j] << j;
            }
        }
        m.push(next);
    }
    m.iter()
        .enumerate()
        .map(|(k, &mk)| (mk << (31 - k)) as u32)
        .collect()
}

fn direct_point(dirs: &[Vec<u32>], n: u32) -> Vec<f64> {
    dirs.iter()
        .map(|v| {
            let x = (0..32)
                .filter(|b| n >> b & 1 == 1)
                .fold(0u32, |acc, b| acc ^ v[b]);
            x as f64 / 2f64.powi(32)
        })
        .collect()
}

#[test]
fn matches_reference_fixture() {
    let (_, expected) = fixture("sobol_d6_n64.txt");
    assert_eq!(expected.len(), 64);
    let mut gen = SobolGenerator::new(6).unwrap();
    for (i, want) in expected.iter().enumerate() {
        let got = gen.next_point().unwrap();
        for (g, w) in got.iter().zip(want) {
            assert!(
                (g - w).abs() <= 1e-15,
                "point {} : {got:?} vs {want:?}",
                i + 1
            );
        }
    }
}

#[test]
fn gray_code_order_matches_direct_construction() {
    let table = DirectionRow::parse_table(include_str!("../data/joe-kuo-32.txt")).unwrap();
    let dim = 32;
    let dirs: Vec<Vec<u32>> = (0..dim)
        .map(|d| directions(if d == 0 { None } else { table.get(d - 1) }))
        .collect();
    let mut gen = SobolGenerator::new(dim).unwrap();
    for n in 1u32..=4096 {
        let gray = n ^ (n >> 1);
        assert_eq!(
            gen.next_point().unwrap(),
            direct_point(&dirs, gray),
            "index {n}"
        );
    }
}

#[test]
fn discrepancy_matches_fixtures() {
    for name in ["cd_d2.txt", "cd_d3.txt"] {
        let (value, points) = fixture(name);
        let want = value.unwrap();
        let got = centered_l2_discrepancy(&points);
        assert!(
            (got - want).abs() <= 1e-12 * want,
            "{name}: {got} vs {want}"
        );
    }
}

#[test]
fn sobol_more_uniform_than_random() {
    let mut gen = SobolGenerator::new(6).unwrap();
    let sobol: Vec<Vec<f64>> = (0..50).map(|_| gen.next_point().unwrap()).collect();
    let cd = centered_l2_discrepancy(&sobol);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mean = (0..100)
        .map(|_| {
            let pts: Vec<Vec<f64>> = (0..50)
                .map(|_| (0..6).map(|_| rng.random()).collect())
                .collect();
            centered_l2_discrepancy(&pts)
        })
        .sum::<f64>()
        / 100.0;
    assert!(cd < mean, "sobol {cd} vs uniform mean {mean}");
}

proptest! {
    #[test]
    fn affine_map_round_trips(
        lo in proptest::collection::vec(-1e3f64..1e3, 1..8),
        width in 1e-3f64..1e3,
        u in 0.0f64..1.0,
    ) {
        let hi: Vec<f64> = lo.iter().enumerate().map(|(i, l)| l + width * (i + 1) as f64).collect();
        let bounds = Bounds::new(lo.clone(), hi.clone()).unwrap();
        let unit = vec![u; lo.len()];
        let x = bounds.map_unit(&unit);
        prop_assert!(bounds.contains(&x));
        for (back, orig) in bounds.unmap(&x).iter().zip(&unit) {
            prop_assert!((back - orig).abs() <= 1e-9);
        }
    }
}
