mod support;

use contactgeom::symbolic::Point;
use contactgeom::tensor::TensorField;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::oracle::{random_coordinate, riemann_numeric, sampler};
use support::*;

const STEP: f64 = 1e-4;
const REL_TOL: f64 = 1e-6;

fn check_against_differences(g: &TensorField, riemann: &TensorField, seed: u64) {
    let chart = g.chart();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    while checked < 10 {
        let values: Vec<_> = (0..chart.dim())
            .map(|_| random_coordinate(&mut rng))
            .collect();
        let point = Point::new(chart.vars(), values.clone()).unwrap();
        let Ok(exact) = riemann.eval(&point) else {
            continue;
        };
        let p: Vec<f64> = values.iter().map(|v| v.to_f64().unwrap()).collect();
        let numeric = riemann_numeric(&sampler(g), &p, STEP);
        for (e, n) in exact.iter().zip(&numeric) {
            let e = e.to_f64().unwrap();
            let err = (e - n).abs() / e.abs().max(1.0);
            assert!(
                err <= REL_TOL,
                "at {p:?}: exact {e}, numeric {n}, error {err}"
            );
        }
        checked += 1;
    }
}

#[test]
fn example_curvature_matches_finite_differences() {
    for (k, eps) in BOTH.into_iter().enumerate() {
        let s = example(eps);
        check_against_differences(s.metric(), &s.geometry().riemann, 11 + k as u64);
    }
}

#[test]
fn rotating_structure_curvature_matches_finite_differences() {
    for (k, eps) in BOTH.into_iter().enumerate() {
        let s = rotating_contact(eps);
        check_against_differences(s.metric(), &s.geometry().riemann, 23 + k as u64);
    }
}
