mod common;

use common::gen;
use common::oracle::{operators, Conn};
use lrough::approx::{approximate, Direction, Pair};
use lrough::lmatrix::{approx_via_matrix, relation_matrix, LatticeMatrix};
use lrough::{FuzzySet, TNormKind};

fn conn(k: TNormKind) -> Conn {
    match k {
        TNormKind::Godel => Conn::Godel,
        TNormKind::Lukasiewicz => Conn::Luk,
        TNormKind::Product => Conn::Product,
    }
}

#[test]
fn finite_lattices_agree_exactly() {
    let mut r = gen::rng(11);
    for _ in 0..500 {
        let (_, c, x) = gen::finite_instance(&mut r);
        for p in Pair::ALL {
            for d in Direction::ALL {
                let a = approximate(&c, &x, p, d).unwrap();
                let b = approx_via_matrix(&c, &x, p, d).unwrap();
                assert_eq!(a.values(), b.values(), "{p} {d} on {c:?}");
            }
        }
    }
}

#[test]
fn unit_interval_agrees_with_matrix_and_oracle() {
    let mut r = gen::rng(12);
    for _ in 0..500 {
        let kind = gen::unit_kind(&mut r);
        let (c, x) = gen::unit_instance(&mut r, kind);
        let rows: Vec<Vec<f64>> = c.members().iter().map(|m| m.values().to_vec()).collect();
        let want = operators(conn(kind), &rows, c.beta(), x.values());
        let mut i = 0;
        for p in Pair::ALL {
            for d in Direction::ALL {
                let a = approximate(&c, &x, p, d).unwrap();
                let b = approx_via_matrix(&c, &x, p, d).unwrap();
                assert!(common::close(a.values(), b.values(), 1e-9), "{kind:?} {p} {d}");
                assert!(common::close(a.values(), &want[i], 1e-9), "{kind:?} {p} {d} oracle");
                i += 1;
            }
        }
    }
}

#[test]
fn relation_matrix_is_reflexive_and_transitive() {
    let mut r = gen::rng(13);
    for _ in 0..200 {
        let (l, c, _) = gen::finite_instance(&mut r);
        let m = relation_matrix(&c);
        let n = m.rows();
        for x in 0..n {
            assert_eq!(m.get(x, x), lrough::ResiduatedLattice::top(&l));
            for y in 0..n {
                for z in 0..n {
                    let t = lrough::ResiduatedLattice::tnorm(&l, m.get(x, y), m.get(y, z));
                    assert!(lrough::ResiduatedLattice::le(&l, t, m.get(x, z)));
                }
            }
        }
    }
}

#[test]
fn column_vector_of_a_set() {
    let x = FuzzySet::new(&lrough::Universe::numbered(3).unwrap(), vec![0.1, 0.2, 0.3]).unwrap();
    let m = LatticeMatrix::column(&x);
    assert_eq!(m.shape(), (3, 1));
    assert_eq!(m.data(), x.values());
}
