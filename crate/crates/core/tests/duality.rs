mod common;

use common::data::*;
use common::gen;
use lrough::approx::{approximate, Direction, Pair};
use lrough::axioms::{check_duality, check_duality_with, unit_grid};
use lrough::{FuzzySet, TNormKind};

fn grid_for(c: &lrough::BetaCovering<lrough::Unit64>, x: &FuzzySet<f64>, pair: Pair) -> Vec<f64> {
    let mut extra = x.values().to_vec();
    for d in Direction::ALL {
        extra.extend_from_slice(approximate(c, x, pair, d).unwrap().values());
    }
    unit_grid(&extra)
}

#[test]
fn finite_lattices_exhaustive() {
    let mut r = gen::rng(31);
    for _ in 0..400 {
        let (_, c, x) = gen::finite_instance(&mut r);
        for p in Pair::ALL {
            let v = check_duality(&c, &x, p).unwrap();
            assert!(v.holds, "pair {p}: {:?} vs {:?}", v.direct, v.via_dual);
        }
    }
}

#[test]
fn lukasiewicz_examples_on_grid() {
    for c in [e61(0.9), e64(0.9), e61(0.5)] {
        let x = e6_x();
        for p in Pair::ALL {
            let v = check_duality_with(&c, &x, p, &grid_for(&c, &x, p)).unwrap();
            assert!(v.holds, "pair {p}");
            assert!(common::close(v.direct.values(), v.via_dual.values(), 1e-9));
        }
    }
}

#[test]
fn random_lukasiewicz_on_grid() {
    let mut r = gen::rng(32);
    for _ in 0..300 {
        let (c, x) = gen::unit_instance(&mut r, TNormKind::Lukasiewicz);
        for p in Pair::ALL {
            let v = check_duality_with(&c, &x, p, &grid_for(&c, &x, p)).unwrap();
            assert!(common::close(v.direct.values(), v.via_dual.values(), 1e-9), "pair {p}");
        }
    }
}

#[test]
fn default_b_range_for_unit_interval() {
    let c = e61(0.9);
    let x = e6_x();
    for p in Pair::ALL {
        assert!(check_duality(&c, &x, p).unwrap().holds);
    }
}
