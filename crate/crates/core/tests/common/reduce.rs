use super::gen;
use lrough::approx::{approximate, Direction, Pair};
use lrough::fuzzy_set::set_equiv;
use lrough::reduction::{core, is_independent, is_reducible, reduct};
use lrough::{validate_covering, BetaCovering, FuzzySet, ResiduatedLattice, TNormKind, UnitInterval, Universe};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random members plus up to two joins or meets of earlier ones, inserted at
/// random positions. At most `max_m` members.
pub fn structured<L: ResiduatedLattice>(
    l: &L,
    r: &mut ChaCha8Rng,
    max_m: usize,
    value: &dyn Fn(&mut ChaCha8Rng) -> L::Value,
    beta: L::Value,
) -> BetaCovering<L> {
    let n = r.gen_range(1..=4);
    let base = r.gen_range(2..=max_m.min(4));
    let mut rows: Vec<Vec<L::Value>> = (0..base).map(|_| (0..n).map(|_| value(r)).collect()).collect();
    for _ in 0..r.gen_range(0..=2) {
        if rows.len() >= max_m {
            break;
        }
        let picks: Vec<usize> = (0..rows.len()).filter(|_| r.gen_bool(0.6)).collect();
        if picks.is_empty() {
            continue;
        }
        let join = r.gen_bool(0.5);
        let new: Vec<L::Value> = (0..n)
            .map(|i| {
                let vals = picks.iter().map(|&j| rows[j][i]);
                if join {
                    l.join_all(vals)
                } else {
                    l.meet_all(vals)
                }
            })
            .collect();
        let at = r.gen_range(0..=rows.len());
        rows.insert(at, new);
    }
    for i in 0..n {
        if !l.le(beta, l.join_all(rows.iter().map(|row| row[i]))) {
            let j = r.gen_range(0..rows.len());
            rows[j][i] = l.top();
        }
    }
    let u = Universe::numbered(n).unwrap();
    validate_covering(l, rows.into_iter().map(|v| FuzzySet::new(&u, v).unwrap()).collect(), beta).unwrap()
}

/// Whether member `i` is the join (or meet) of a non-empty set of the others.
fn by_subsets<L: ResiduatedLattice>(c: &BetaCovering<L>, i: usize, join: bool) -> bool {
    let l = c.lattice();
    let m = c.members();
    let others: Vec<usize> = (0..m.len()).filter(|&j| j != i).collect();
    (1u32..1 << others.len()).any(|mask| {
        let s: Vec<usize> = (0..others.len()).filter(|b| mask >> b & 1 == 1).map(|b| others[b]).collect();
        let comb = FuzzySet::from_fn(c.universe(), |x| {
            let vals = s.iter().map(|&j| m[j].get(x));
            if join {
                l.join_all(vals)
            } else {
                l.meet_all(vals)
            }
        });
        set_equiv(l, &comb, &m[i])
    })
}

fn same_on<L: ResiduatedLattice>(a: &BetaCovering<L>, b: &BetaCovering<L>, xs: &[FuzzySet<L::Value>], pair: Pair) -> bool {
    xs.iter().all(|x| {
        Direction::ALL.iter().all(|&d| {
            set_equiv(a.lattice(), &approximate(a, x, pair, d).unwrap(), &approximate(b, x, pair, d).unwrap())
        })
    })
}

#[derive(Default)]
pub struct Tally {
    pub coverings: usize,
    pub reducible: usize,
    pub independent: usize,
    pub oracle_checked: usize,
    pub failures: Vec<String>,
}

pub fn check_one<L: ResiduatedLattice>(
    c: &BetaCovering<L>,
    r: &mut ChaCha8Rng,
    value: &dyn Fn(&mut ChaCha8Rng) -> L::Value,
    t: &mut Tally,
) {
    t.coverings += 1;
    let xs: Vec<FuzzySet<L::Value>> = (0..20).map(|_| FuzzySet::from_fn(c.universe(), |_| value(r))).collect();
    for (i, name) in c.names().iter().enumerate() {
        let red = is_reducible(c, name).unwrap();
        let ind = is_independent(c, name).unwrap();
        if c.len() <= 5 {
            t.oracle_checked += 1;
            if red.is_some() != by_subsets(c, i, true) {
                t.failures.push(format!("reducibility of {name} disagrees with subset search"));
            }
            if ind.is_some() != by_subsets(c, i, false) {
                t.failures.push(format!("independence of {name} disagrees with subset search"));
            }
        }
        if red.is_some() {
            t.reducible += 1;
            let smaller = c.without(i).unwrap();
            for p in [Pair::One, Pair::Three] {
                if !same_on(c, &smaller, &xs, p) {
                    t.failures.push(format!("removing reducible {name} changed pair {p}"));
                }
            }
        }
        if ind.is_some() {
            t.independent += 1;
            if !same_on(c, &c.without(i).unwrap(), &xs, Pair::Two) {
                t.failures.push(format!("removing independent {name} changed pair 2"));
            }
        }
    }
    let rd = reduct(c).unwrap().surviving;
    let cr = core(c).unwrap().surviving;
    for p in [Pair::One, Pair::Three] {
        if !same_on(c, &rd, &xs, p) {
            t.failures.push(format!("reduct changed pair {p}"));
        }
    }
    if !same_on(c, &cr, &xs, Pair::Two) {
        t.failures.push("core changed pair 2".into());
    }
}

/// 500 coverings: half on finite lattices, half on Gödel and Łukasiewicz.
pub fn run(seed: u64) -> Tally {
    let mut r = gen::rng(seed);
    let mut t = Tally::default();
    for k in 0..500 {
        if k % 2 == 0 {
            let l = gen::finite_lattice(&mut r);
            let carrier = l.carrier().unwrap();
            let beta = carrier[r.gen_range(1..carrier.len())];
            let value = |r: &mut ChaCha8Rng| carrier[r.gen_range(0..carrier.len())];
            let c = structured(&l, &mut r, 5, &value, beta);
            check_one(&c, &mut r, &value, &mut t);
        } else {
            let kind = if k % 4 == 1 { TNormKind::Godel } else { TNormKind::Lukasiewicz };
            let l = UnitInterval::<f64>::new(kind);
            let beta = r.gen_range(1..=20) as f64 / 20.0;
            let value = |r: &mut ChaCha8Rng| gen::grid_value(r);
            let c = structured(&l, &mut r, 5, &value, beta);
            check_one(&c, &mut r, &value, &mut t);
        }
    }
    t
}
