//! Reducible and independent members, reducts and cores.
//!
//! A member is reducible when it is the join of some other members, and
//! independent when it is the meet of some other members. Any such
//! decomposition can only use members below (resp. above) it, so the join
//! (resp. meet) of all of those decides the question.

use crate::covering::BetaCovering;
use crate::error::{Error, Result};
use crate::fuzzy_set::{is_subset, set_equiv, FuzzySet};
use crate::lattice::ResiduatedLattice;
use crate::approx::Pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Join,
    Meet,
}

/// One member taken out of a covering and the members that reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Removal {
    pub name: String,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ReductionReport<L: ResiduatedLattice> {
    pub original: Vec<String>,
    pub removed: Vec<Removal>,
    pub surviving: BetaCovering<L>,
}

impl<L: ResiduatedLattice> ReductionReport<L> {
    pub fn surviving_names(&self) -> &[String] {
        self.surviving.names()
    }
}

fn combine<L: ResiduatedLattice>(l: &L, kind: Kind, sets: &[&FuzzySet<L::Value>], like: &FuzzySet<L::Value>) -> FuzzySet<L::Value> {
    FuzzySet::from_fn(like.universe(), |i| {
        let vals = sets.iter().map(|s| s.get(i));
        match kind {
            Kind::Join => l.join_all(vals),
            Kind::Meet => l.meet_all(vals),
        }
    })
}

/// Indices of a non-empty, irredundant decomposition of member `target`
/// among the members at `pool`, if one exists.
fn decompose<L: ResiduatedLattice>(c: &BetaCovering<L>, target: usize, pool: &[usize], kind: Kind) -> Option<Vec<usize>> {
    let l = c.lattice();
    let m = c.members();
    let t = &m[target];
    let mut cand: Vec<usize> = pool
        .iter()
        .copied()
        .filter(|&j| {
            j != target
                && match kind {
                    Kind::Join => is_subset(l, &m[j], t),
                    Kind::Meet => is_subset(l, t, &m[j]),
                }
        })
        .collect();
    let reproduces = |idx: &[usize]| {
        let sets: Vec<&FuzzySet<L::Value>> = idx.iter().map(|&j| &m[j]).collect();
        !idx.is_empty() && set_equiv(l, &combine(l, kind, &sets, t), t)
    };
    if !reproduces(&cand) {
        return None;
    }
    let mut k = 0;
    while k < cand.len() {
        let mut trial = cand.clone();
        trial.remove(k);
        if reproduces(&trial) {
            cand = trial;
        } else {
            k += 1;
        }
    }
    Some(cand)
}

fn witness_names<L: ResiduatedLattice>(c: &BetaCovering<L>, idx: Option<Vec<usize>>) -> Option<Vec<String>> {
    idx.map(|v| v.into_iter().map(|j| c.names()[j].clone()).collect())
}

/// Members whose join equals `name`, if `name` is reducible.
pub fn is_reducible<L: ResiduatedLattice>(c: &BetaCovering<L>, name: &str) -> Result<Option<Vec<String>>> {
    let i = c.index_of(name)?;
    let pool: Vec<usize> = (0..c.len()).collect();
    Ok(witness_names(c, decompose(c, i, &pool, Kind::Join)))
}

/// Members whose meet equals `name`, if `name` is independent.
pub fn is_independent<L: ResiduatedLattice>(c: &BetaCovering<L>, name: &str) -> Result<Option<Vec<String>>> {
    let i = c.index_of(name)?;
    let pool: Vec<usize> = (0..c.len()).collect();
    Ok(witness_names(c, decompose(c, i, &pool, Kind::Meet)))
}

fn reduce<L: ResiduatedLattice>(c: &BetaCovering<L>, kind: Kind) -> Result<ReductionReport<L>> {
    let l = c.lattice();
    let m = c.members();
    let mut removed: Vec<(usize, Vec<usize>)> = Vec::new();
    // A later copy of an earlier member goes first, witnessed by that member.
    let mut pool = Vec::new();
    for i in 0..c.len() {
        match pool.iter().copied().find(|&j: &usize| set_equiv(l, &m[i], &m[j])) {
            Some(j) => removed.push((i, vec![j])),
            None => pool.push(i),
        }
    }
    let mut keep = Vec::new();
    for &i in &pool {
        match decompose(c, i, &pool, kind) {
            Some(w) => removed.push((i, w)),
            None => keep.push(i),
        }
    }
    removed.sort_by_key(|r| r.0);
    let surviving = c.subfamily(keep)?;
    Ok(ReductionReport {
        original: c.names().to_vec(),
        removed: removed
            .into_iter()
            .map(|(i, w)| Removal {
                name: c.names()[i].clone(),
                witnesses: w.into_iter().map(|j| c.names()[j].clone()).collect(),
            })
            .collect(),
        surviving,
    })
}

/// Removes every reducible member at once.
pub fn reduct<L: ResiduatedLattice>(c: &BetaCovering<L>) -> Result<ReductionReport<L>> {
    reduce(c, Kind::Join)
}

/// Removes every independent member at once.
pub fn core<L: ResiduatedLattice>(c: &BetaCovering<L>) -> Result<ReductionReport<L>> {
    reduce(c, Kind::Meet)
}

fn same_family<L: ResiduatedLattice>(l: &L, a: &[FuzzySet<L::Value>], b: &[FuzzySet<L::Value>]) -> bool {
    let within = |x: &[FuzzySet<L::Value>], y: &[FuzzySet<L::Value>]| {
        x.iter().all(|s| y.iter().any(|t| set_equiv(l, s, t)))
    };
    within(a, b) && within(b, a)
}

/// Compares the reducts (pairs 1 and 3) or cores (pair 2) of two coverings as
/// families of values; equal reducts or cores give equal operators.
pub fn same_operators<L>(a: &BetaCovering<L>, b: &BetaCovering<L>, pair: Pair) -> Result<bool>
where
    L: ResiduatedLattice + PartialEq,
{
    let l = a.lattice();
    if l != b.lattice() || a.universe() != b.universe() || !l.equiv(a.beta(), b.beta()) {
        return Err(Error::ContextMismatch);
    }
    let (ra, rb) = match pair {
        Pair::One | Pair::Three => (reduct(a)?, reduct(b)?),
        Pair::Two => (core(a)?, core(b)?),
    };
    Ok(same_family(l, ra.surviving.members(), rb.surviving.members()))
}
