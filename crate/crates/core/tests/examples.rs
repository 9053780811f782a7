mod common;

use common::data::*;
use common::close;
use lrough::approx::*;
use lrough::fuzzy_set::{intersection_beta, subsethood_beta};
use lrough::lmatrix::{approx_via_matrix, btri, relation_matrix, tri, LatticeMatrix};
use lrough::reduction::{core, reduct};
use lrough::{Error, FuzzySet, ResiduatedLattice};

fn vals(s: &FuzzySet<f64>) -> Vec<f64> {
    s.values().to_vec()
}

fn matrix_close(m: &LatticeMatrix<f64>, rows: &[&[f64]]) -> bool {
    m.rows() == rows.len() && rows.iter().enumerate().all(|(i, r)| close(m.row(i), r, 1e-9))
}

#[test]
fn table1_functionals() {
    let f = finite("table1.json");
    let l = f.covering.lattice();
    assert_eq!(l.names(), lrough::FiniteLattice::table1().names());
    let (a, b) = (f.target("A").unwrap(), f.target("B").unwrap());
    let beta = f.covering.beta();
    assert_eq!(l.name_of(beta), "a");
    assert_eq!(intersection_beta(l, a, b, beta).unwrap(), beta);
    assert_eq!(subsethood_beta(l, a, b, beta).unwrap(), l.top());
}

#[test]
fn godel_covering_all_six() {
    let c = e51(0.6);
    let x = e51_x();
    let expect: [(Pair, Direction, [f64; 6]); 6] = [
        (Pair::One, Direction::Lower, [0.4, 0.3, 0.4, 0.4, 0.4, 0.4]),
        (Pair::One, Direction::Upper, [0.4, 0.4, 0.6, 1.0, 0.6, 1.0]),
        (Pair::Two, Direction::Lower, [0.3; 6]),
        (Pair::Two, Direction::Upper, [0.5, 0.6, 0.6, 0.6, 0.6, 0.6]),
        (Pair::Three, Direction::Lower, [0.3, 0.3, 0.4, 0.4, 0.4, 0.5]),
        (Pair::Three, Direction::Upper, [0.5, 0.3, 0.5, 0.6, 0.4, 0.5]),
    ];
    for (p, d, v) in expect {
        assert!(close(&vals(&approximate(&c, &x, p, d).unwrap()), &v, 1e-9), "{p} {d}");
        assert!(close(&vals(&approx_via_matrix(&c, &x, p, d).unwrap()), &v, 1e-9), "{p} {d} matrix");
    }
}

#[test]
fn godel_relation_matrix() {
    let m = relation_matrix(&e51(0.6));
    assert!(matrix_close(
        &m,
        &[
            &[1.0, 0.1, 0.2, 0.3, 0.2, 0.1],
            &[0.5, 1.0, 0.2, 0.3, 0.2, 0.1],
            &[0.4, 0.1, 1.0, 0.6, 0.4, 0.1],
            &[0.4, 0.1, 0.2, 1.0, 0.2, 0.1],
            &[0.4, 0.1, 0.6, 0.6, 1.0, 0.1],
            &[0.5, 0.1, 1.0, 1.0, 0.4, 1.0],
        ]
    ));
    assert!(!m.equiv(&lrough::UnitInterval::godel(), &m.transpose()));
}

#[test]
fn threshold_too_high_names_first_point() {
    let err = load("e5-1-beta07.json").unwrap_err();
    assert_eq!(err, Error::NotACovering { point: "x4".into() });
}

#[test]
fn lukasiewicz_pair_one_and_reduct() {
    let c = e61(0.9);
    let x = e6_x();
    let lo = [0.5, 0.3, 0.2, 0.4, 0.2];
    let up = [0.8, 0.6, 0.9, 0.9, 0.7];
    let r = reduct(&c).unwrap();
    assert_eq!(r.surviving_names(), ["C1", "C2", "C3"]);
    assert_eq!(r.removed[0].name, "C4");
    for cov in [&c, &r.surviving] {
        assert!(close(&vals(&lower1(cov, &x).unwrap()), &lo, 1e-9));
        assert!(close(&vals(&upper1(cov, &x).unwrap()), &up, 1e-9));
    }
}

#[test]
fn lukasiewicz_pair_two_and_core() {
    let c = e64(0.9);
    let x = e6_x();
    let lo = [0.3, 0.5, 0.4, 0.4, 0.4];
    let up = [0.8, 0.6, 0.7, 0.7, 0.7];
    let k = core(&c).unwrap();
    assert_eq!(k.surviving_names(), ["C1", "C2", "C3"]);
    for cov in [&c, &k.surviving] {
        assert!(close(&vals(&lower2(cov, &x).unwrap()), &lo, 1e-9));
        assert!(close(&vals(&upper2(cov, &x).unwrap()), &up, 1e-9));
    }
}

#[test]
fn lukasiewicz_relation_matrix() {
    let c = e61(0.9);
    assert!(matrix_close(
        &relation_matrix(&c),
        &[
            &[1.0, 0.4, 0.3, 0.9, 0.4],
            &[0.8, 1.0, 0.4, 0.7, 0.6],
            &[1.0, 0.5, 1.0, 1.0, 1.0],
            &[1.0, 0.5, 0.4, 1.0, 0.5],
            &[0.9, 0.5, 0.5, 0.8, 1.0],
        ]
    ));
    let r = reduct(&c).unwrap().surviving;
    assert!(relation_matrix(&r).equiv(c.lattice(), &relation_matrix(&c)));
}

#[test]
fn lukasiewicz_pair_three() {
    // Values from the definitions, R(y, x) in the y-th row, with β = 0.9.
    let c = e61(0.9);
    let x = e6_x();
    let r = reduct(&c).unwrap().surviving;
    for cov in [&c, &r] {
        assert!(close(&vals(&lower3(cov, &x).unwrap()), &[0.3, 0.3, 0.6, 0.4, 0.2], 1e-9));
        assert!(close(&vals(&upper3(cov, &x).unwrap()), &[0.9, 0.4, 0.4, 0.9, 0.4], 1e-9));
    }
}

#[test]
fn pair_three_row_reading_without_threshold() {
    // Composing with M_R itself (not its transpose) and dropping β gives
    // (0.6, 0.2, 0.1, 0.6, 0.1) and (0.9, 0.7, 1, 1, 0.8).
    let c = e61(0.9);
    let l = c.lattice();
    let mr = relation_matrix(&c);
    let mx = LatticeMatrix::column(&e6_x());
    assert!(close(tri(l, &mr, &mx).unwrap().data(), &[0.6, 0.2, 0.1, 0.6, 0.1], 1e-9));
    assert!(close(btri(l, &mr, &mx).unwrap().data(), &[0.9, 0.7, 1.0, 1.0, 0.8], 1e-9));
}

#[test]
fn unit_interval_ops_match_oracle_on_examples() {
    use common::oracle::{operators, Conn};
    let cases = [
        (e51(0.6), Conn::Godel, e51_x().values().to_vec()),
        (e61(0.9), Conn::Luk, e6_x().values().to_vec()),
        (e64(0.9), Conn::Luk, e6_x().values().to_vec()),
    ];
    for (c, k, xv) in cases {
        let rows: Vec<Vec<f64>> = c.members().iter().map(|m| m.values().to_vec()).collect();
        let want = operators(k, &rows, c.beta(), &xv);
        let x = FuzzySet::new(c.universe(), xv).unwrap();
        let mut i = 0;
        for p in Pair::ALL {
            for d in Direction::ALL {
                assert!(close(&vals(&approximate(&c, &x, p, d).unwrap()), &want[i], 1e-9), "{p} {d}");
                i += 1;
            }
        }
    }
}
