#![allow(dead_code)]

pub mod reduce;

use lrough::approx::{Direction, Pair};
use lrough::axioms::{
    check_lattice_requirement, failing, reconstruct_covering, theorem_axioms, OperatorTable, ReconstructionMethod,
};
use lrough::fuzzy_set::all_sets;
use lrough::{validate_covering, FiniteLattice, FuzzySet, ResiduatedLattice, Universe};

pub fn set<V: Copy>(u: &Universe, v: &[V]) -> FuzzySet<V> {
    FuzzySet::new(u, v.to_vec()).unwrap()
}

pub fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[derive(Debug, Default, Clone)]
pub struct SweepStats {
    pub coverings: usize,
    pub operators: usize,
    pub soundness_failures: Vec<String>,
    pub completeness_failures: Vec<String>,
    /// Operators for which the family read directly off `g` did not reproduce it.
    pub direct_misses: Vec<(Pair, Direction, String, usize)>,
}

/// Every covering of at most three distinct members over `l` and `U` with
/// `|U| ≤ max_u`, at every positive β of the carrier.
pub fn sweep(l: &FiniteLattice, max_u: usize) -> SweepStats {
    let mut st = SweepStats::default();
    let mut misses = std::collections::BTreeMap::<(u8, u8, String), usize>::new();
    let carrier = l.carrier().unwrap();
    for n in 1..=max_u {
        let u = Universe::numbered(n).unwrap();
        let sets = all_sets(l, &u, usize::MAX).unwrap();
        let m = sets.len();
        let mut families: Vec<Vec<usize>> = Vec::new();
        for i in 0..m {
            families.push(vec![i]);
            for j in i + 1..m {
                families.push(vec![i, j]);
                for k in j + 1..m {
                    families.push(vec![i, j, k]);
                }
            }
        }
        for fam in &families {
            for &beta in carrier.iter().filter(|&&b| l.is_positive(b)) {
                let members: Vec<_> = fam.iter().map(|&i| sets[i].clone()).collect();
                let Ok(c) = validate_covering(l, members, beta) else { continue };
                st.coverings += 1;
                for pair in Pair::ALL {
                    for dir in Direction::ALL {
                        if check_lattice_requirement(l, pair, dir).is_err() {
                            continue;
                        }
                        st.operators += 1;
                        let g = OperatorTable::from_covering(&c, pair, dir).unwrap();
                        let bad = failing(&g, beta, theorem_axioms(pair, dir)).unwrap();
                        if !bad.is_empty() {
                            st.soundness_failures.push(format!("{} {pair} {dir} {:?} β={beta:?}: {bad:?}", l.name(), c.members()));
                            continue;
                        }
                        match reconstruct_covering(&g, beta, pair, dir) {
                            Ok(r) => {
                                let h = OperatorTable::from_covering(&r.covering, pair, dir).unwrap();
                                if !h.same_as(&g) {
                                    st.completeness_failures.push(format!("{} {pair} {dir}: round trip differs", l.name()));
                                }
                                if r.method != ReconstructionMethod::Direct {
                                    *misses.entry((pair.number(), dir as u8, l.format_value(beta, 4))).or_default() += 1;
                                }
                            }
                            Err(e) => st.completeness_failures.push(format!("{} {pair} {dir} {:?}: {e}", l.name(), c.members())),
                        }
                    }
                }
            }
        }
    }
    st.direct_misses = misses
        .into_iter()
        .map(|((p, d, b), k)| (Pair::from_number(p).unwrap(), if d == 0 { Direction::Lower } else { Direction::Upper }, b, k))
        .collect();
    st
}

/// Textbook evaluation of the six operators on plain `f64` vectors, written
/// straight from the definitions without any library code.
pub mod oracle {
    #[derive(Clone, Copy, Debug)]
    pub enum Conn {
        Godel,
        Luk,
        Product,
    }

    impl Conn {
        pub fn t(self, a: f64, b: f64) -> f64 {
            match self {
                Conn::Godel => a.min(b),
                Conn::Luk => (a + b - 1.0).max(0.0),
                Conn::Product => a * b,
            }
        }

        pub fn imp(self, a: f64, b: f64) -> f64 {
            if a <= b + 1e-12 {
                return 1.0;
            }
            match self {
                Conn::Godel => b,
                Conn::Luk => 1.0 - a + b,
                Conn::Product => b / a,
            }
        }
    }

    fn meet(it: impl Iterator<Item = f64>) -> f64 {
        it.fold(1.0, f64::min)
    }

    fn join(it: impl Iterator<Item = f64>) -> f64 {
        it.fold(0.0, f64::max)
    }

    /// `[lower1, upper1, lower2, upper2, lower3, upper3]`.
    pub fn operators(k: Conn, cov: &[Vec<f64>], beta: f64, x: &[f64]) -> [Vec<f64>; 6] {
        let n = x.len();
        let s: Vec<f64> = cov.iter().map(|c| k.imp(beta, meet((0..n).map(|i| k.imp(c[i], x[i]))))).collect();
        let nn: Vec<f64> = cov.iter().map(|c| k.t(join((0..n).map(|i| k.t(c[i], x[i]))), beta)).collect();
        let r = |y: usize, z: usize| meet(cov.iter().map(|c| k.imp(c[y], c[z])));
        let pt = |f: &dyn Fn(usize) -> f64| (0..n).map(f).collect::<Vec<f64>>();
        [
            pt(&|i| join(cov.iter().zip(&s).map(|(c, &v)| k.t(c[i], v)))),
            pt(&|i| meet(cov.iter().zip(&nn).map(|(c, &v)| k.imp(c[i], v)))),
            pt(&|i| meet(cov.iter().zip(&s).map(|(c, &v)| k.imp(c[i], v)))),
            pt(&|i| join(cov.iter().zip(&nn).map(|(c, &v)| k.t(c[i], v)))),
            pt(&|i| k.imp(beta, meet((0..n).map(|y| k.imp(r(y, i), x[y]))))),
            pt(&|i| k.t(join((0..n).map(|y| k.t(r(y, i), x[y]))), beta)),
        ]
    }
}

pub mod gen {
    use lrough::fuzzy_set::FuzzySet;
    use lrough::{validate_covering, BetaCovering, FiniteLattice, ResiduatedLattice, TNormKind, Unit64, UnitInterval, Universe};
    use rand::seq::SliceRandom;
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        rand::SeedableRng::seed_from_u64(seed)
    }

    /// Multiples of 0.05 in `[0, 1]`.
    pub fn grid_value(r: &mut ChaCha8Rng) -> f64 {
        r.gen_range(0..=20) as f64 / 20.0
    }

    pub fn unit_kind(r: &mut ChaCha8Rng) -> TNormKind {
        *[TNormKind::Godel, TNormKind::Lukasiewicz, TNormKind::Product].choose(r).unwrap()
    }

    pub fn finite_lattice(r: &mut ChaCha8Rng) -> FiniteLattice {
        let mut all = FiniteLattice::all_up_to(4);
        all.push(FiniteLattice::table1());
        all.choose(r).unwrap().clone()
    }

    /// Random members, then raises one member wherever the join misses `β`.
    pub fn covering<L: ResiduatedLattice>(
        l: &L,
        n: usize,
        m: usize,
        beta: L::Value,
        mut value: impl FnMut() -> L::Value,
        mut pick: impl FnMut(usize) -> usize,
    ) -> BetaCovering<L> {
        let u = Universe::numbered(n).unwrap();
        let mut rows: Vec<Vec<L::Value>> = (0..m).map(|_| (0..n).map(|_| value()).collect()).collect();
        for i in 0..n {
            if !l.le(beta, l.join_all(rows.iter().map(|r| r[i]))) {
                let j = pick(m);
                rows[j][i] = l.top();
            }
        }
        let members = rows.into_iter().map(|r| FuzzySet::new(&u, r).unwrap()).collect();
        validate_covering(l, members, beta).unwrap()
    }

    pub fn finite_instance(r: &mut ChaCha8Rng) -> (FiniteLattice, BetaCovering<FiniteLattice>, FuzzySet<lrough::Elem>) {
        let l = finite_lattice(r);
        let carrier = l.carrier().unwrap();
        let positive: Vec<_> = carrier.iter().copied().filter(|&b| l.is_positive(b)).collect();
        let beta = *positive.choose(r).unwrap();
        let (n, m) = (r.gen_range(1..=5), r.gen_range(1..=5));
        let seed: u64 = r.gen();
        let mut r2 = rng(seed);
        let mut r3 = rng(seed ^ 1);
        let c = covering(&l, n, m, beta, || *carrier.choose(&mut r2).unwrap(), |m| r3.gen_range(0..m));
        let x = FuzzySet::from_fn(c.universe(), |_| *carrier.choose(r).unwrap());
        (l, c, x)
    }

    pub fn unit_instance(r: &mut ChaCha8Rng, kind: TNormKind) -> (BetaCovering<Unit64>, FuzzySet<f64>) {
        let l = UnitInterval::<f64>::new(kind);
        let beta = r.gen_range(1..=20) as f64 / 20.0;
        let (n, m) = (r.gen_range(1..=6), r.gen_range(1..=5));
        let seed: u64 = r.gen();
        let mut r2 = rng(seed);
        let mut r3 = rng(seed ^ 1);
        let c = covering(&l, n, m, beta, || grid_value(&mut r2), |m| r3.gen_range(0..m));
        let x = FuzzySet::from_fn(c.universe(), |_| grid_value(r));
        (c, x)
    }
}

pub mod data {
    use std::path::PathBuf;

    use lrough::io::{AnyLoaded, CoveringFile, Loaded};
    use lrough::{BetaCovering, FiniteLattice, FuzzySet, Unit64};

    pub fn fixture_path(name: &str) -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
    }

    pub fn fixture_text(name: &str) -> String {
        std::fs::read_to_string(fixture_path(name)).unwrap()
    }

    pub fn load(name: &str) -> lrough::Result<AnyLoaded> {
        CoveringFile::parse(&fixture_text(name))?.load(None)
    }

    pub fn unit(name: &str) -> Loaded<Unit64> {
        match load(name).unwrap() {
            AnyLoaded::Unit(l) => l,
            AnyLoaded::Finite(_) => panic!("{name} is not a unit-interval fixture"),
        }
    }

    pub fn finite(name: &str) -> Loaded<FiniteLattice> {
        match load(name).unwrap() {
            AnyLoaded::Finite(l) => l,
            AnyLoaded::Unit(_) => panic!("{name} is not a finite-lattice fixture"),
        }
    }

    pub fn e51(beta: f64) -> BetaCovering<Unit64> {
        unit("e5-1.json").covering.with_beta(beta).unwrap()
    }

    pub fn e61(beta: f64) -> BetaCovering<Unit64> {
        unit("e6-1.json").covering.with_beta(beta).unwrap()
    }

    pub fn e64(beta: f64) -> BetaCovering<Unit64> {
        unit("e6-4.json").covering.with_beta(beta).unwrap()
    }

    pub fn e51_x() -> FuzzySet<f64> {
        unit("e5-1.json").target("X").unwrap().clone()
    }

    pub fn e6_x() -> FuzzySet<f64> {
        unit("e6-1.json").target("X").unwrap().clone()
    }
}
