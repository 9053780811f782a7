mod common;

use common::gen;
use common::reduce::{run, structured};
use lrough::approx::Pair;
use lrough::reduction::{core, reduct, same_operators};
use lrough::UnitInterval;
use rand_chacha::ChaCha8Rng;

#[test]
fn reduction_invariance_randomized() {
    let t = run(41);
    assert!(t.failures.is_empty(), "{:?}", &t.failures[..t.failures.len().min(5)]);
    assert_eq!(t.coverings, 500);
    assert!(t.reducible > 50 && t.independent > 50, "{} {}", t.reducible, t.independent);
}

#[test]
fn same_operators_after_reduction() {
    let mut r = gen::rng(42);
    for _ in 0..100 {
        let l = UnitInterval::<f64>::lukasiewicz();
        let value = |r: &mut ChaCha8Rng| gen::grid_value(r);
        let c = structured(&l, &mut r, 5, &value, 0.5);
        assert!(same_operators(&c, &reduct(&c).unwrap().surviving, Pair::One).unwrap());
        assert!(same_operators(&c, &reduct(&c).unwrap().surviving, Pair::Three).unwrap());
        assert!(same_operators(&c, &core(&c).unwrap().surviving, Pair::Two).unwrap());
    }
}

#[test]
fn same_operators_needs_one_context() {
    let a = common::data::e61(0.9);
    let b = common::data::e61(0.8);
    assert_eq!(same_operators(&a, &b, Pair::One).unwrap_err(), lrough::Error::ContextMismatch);
}
