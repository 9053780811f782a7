use std::fmt;

use super::{check_lattice_requirement, failing, theorem_axioms, OperatorTable};
use crate::approx::{Direction, Pair};
use crate::covering::{validate_covering, BetaCovering};
use crate::error::{Error, Result};
use crate::fuzzy_set::{check_beta, co_singleton, intersection_of, is_subset, set_equiv, singleton, subsethood_of, FuzzySet};
use crate::lattice::ResiduatedLattice;
use crate::reduction::{core, reduct};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReconstructionMethod {
    /// The family built directly from values of `g`.
    Direct,
    /// The reduced family of every set whose one-member operator is bounded by `g`.
    Admissible,
}

impl fmt::Display for ReconstructionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReconstructionMethod::Direct => "direct",
            ReconstructionMethod::Admissible => "admissible",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Reconstruction<L: ResiduatedLattice> {
    pub covering: BetaCovering<L>,
    pub method: ReconstructionMethod,
    /// Why the direct family was rejected, when it was.
    pub direct_failure: Option<String>,
}

fn dedup<L: ResiduatedLattice>(l: &L, sets: Vec<FuzzySet<L::Value>>) -> Vec<FuzzySet<L::Value>> {
    let mut out: Vec<FuzzySet<L::Value>> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| set_equiv(l, t, &s)) {
            out.push(s);
        }
    }
    out
}

fn direct_family<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value, pair: Pair, dir: Direction) -> Vec<FuzzySet<L::Value>> {
    let l = g.lattice();
    let u = g.universe();
    let n = u.len();
    let neg = |s: &FuzzySet<L::Value>| s.map(|v| l.negation(v));
    let sets = match (pair, dir) {
        (Pair::One, Direction::Lower) => g
            .domain()
            .iter()
            .filter(|x| set_equiv(l, &g.apply(x).map(|v| l.tnorm(beta, v)), x))
            .cloned()
            .collect(),
        (Pair::One, Direction::Upper) => {
            g.domain().iter().filter(|a| set_equiv(l, &neg(g.apply(&neg(a))), a)).cloned().collect()
        }
        (Pair::Two, _) => {
            let mut out = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    let v = match dir {
                        Direction::Upper => g.apply(&singleton(l, u, x)).get(y),
                        Direction::Lower => l.negation(g.apply(&co_singleton(l, u, x)).get(y)),
                    };
                    out.push(FuzzySet::from_fn(u, |z| if z == x || z == y { v } else { l.bottom() }));
                }
            }
            out
        }
        (Pair::Three, Direction::Upper) => (0..n).map(|x| g.apply(&singleton(l, u, x)).clone()).collect(),
        (Pair::Three, Direction::Lower) => (0..n).map(|x| neg(g.apply(&co_singleton(l, u, x)))).collect(),
    };
    dedup(l, sets)
}

/// The operator a one-member family `{d}` would induce, whether or not it covers.
fn single_term<L: ResiduatedLattice>(
    l: &L,
    beta: L::Value,
    d: &FuzzySet<L::Value>,
    x: &FuzzySet<L::Value>,
    pair: Pair,
    dir: Direction,
) -> FuzzySet<L::Value> {
    let (dv, xv) = (d.values(), x.values());
    match pair {
        Pair::One | Pair::Two => {
            let s = l.implication(beta, subsethood_of(l, dv, xv));
            let nn = l.tnorm(intersection_of(l, dv, xv), beta);
            match (pair, dir) {
                (Pair::One, Direction::Lower) => d.map(|c| l.tnorm(c, s)),
                (Pair::One, Direction::Upper) => d.map(|c| l.implication(c, nn)),
                (Pair::Two, Direction::Lower) => d.map(|c| l.implication(c, s)),
                _ => d.map(|c| l.tnorm(c, nn)),
            }
        }
        Pair::Three => {
            let r = |y: usize, z: usize| l.implication(dv[y], dv[z]);
            FuzzySet::from_fn(x.universe(), |z| match dir {
                Direction::Lower => {
                    l.implication(beta, l.meet_all((0..xv.len()).map(|y| l.implication(r(y, z), xv[y]))))
                }
                Direction::Upper => {
                    l.tnorm(l.join_all((0..xv.len()).map(|y| l.tnorm(r(y, z), xv[y]))), beta)
                }
            })
        }
    }
}

fn admissible_family<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value, pair: Pair, dir: Direction) -> Vec<FuzzySet<L::Value>> {
    let l = g.lattice();
    // The operator grows with the family for these, and shrinks for the others.
    let grows = matches!(
        (pair, dir),
        (Pair::One, Direction::Lower) | (Pair::Two, Direction::Upper) | (Pair::Three, Direction::Lower)
    );
    g.domain()
        .iter()
        .filter(|d| {
            g.domain().iter().zip(g.images()).all(|(x, gx)| {
                let t = single_term(l, beta, d, x, pair, dir);
                if grows {
                    is_subset(l, &t, gx)
                } else {
                    is_subset(l, gx, &t)
                }
            })
        })
        .cloned()
        .collect()
}

fn attempt<L: ResiduatedLattice>(
    g: &OperatorTable<L>,
    beta: L::Value,
    family: Vec<FuzzySet<L::Value>>,
    pair: Pair,
    dir: Direction,
) -> Result<BetaCovering<L>, String> {
    if family.is_empty() {
        return Err("the family is empty".into());
    }
    let c = validate_covering(g.lattice(), family, beta).map_err(|e| e.to_string())?;
    let h = OperatorTable::from_covering(&c, pair, dir).map_err(|e| e.to_string())?;
    match h.first_difference(g) {
        None => Ok(c),
        Some(x) => Err(format!("the family induces a different operator at {:?}", x.values())),
    }
}

/// A covering whose `(pair, dir)` operator is exactly `g`.
///
/// The lattice requirement and the characterizing axioms are checked first.
/// The family read off `g` directly is tried first; if it does not reproduce
/// `g`, the largest family of sets that individually respect `g` is used,
/// reduced (pairs 1 and 3) or cored (pair 2).
pub fn reconstruct_covering<L: ResiduatedLattice>(
    g: &OperatorTable<L>,
    beta: L::Value,
    pair: Pair,
    dir: Direction,
) -> Result<Reconstruction<L>> {
    let l = g.lattice();
    check_beta(l, beta)?;
    check_lattice_requirement(l, pair, dir)?;
    let bad = failing(g, beta, theorem_axioms(pair, dir))?;
    if !bad.is_empty() {
        return Err(Error::AxiomsNotSatisfied(bad.iter().map(|a| a.to_string()).collect()));
    }
    let direct_failure = match attempt(g, beta, direct_family(g, beta, pair, dir), pair, dir) {
        Ok(covering) => return Ok(Reconstruction { covering, method: ReconstructionMethod::Direct, direct_failure: None }),
        Err(e) => e,
    };
    let full = attempt(g, beta, admissible_family(g, beta, pair, dir), pair, dir)
        .map_err(|e| Error::ReconstructionFailed(format!("direct family: {direct_failure}; admissible family: {e}")))?;
    let reduced = match pair {
        Pair::Two => core(&full),
        _ => reduct(&full),
    }
    .map(|r| r.surviving)
    .ok()
    .filter(|c| OperatorTable::from_covering(c, pair, dir).is_ok_and(|h| h.same_as(g)));
    Ok(Reconstruction {
        covering: reduced.unwrap_or(full),
        method: ReconstructionMethod::Admissible,
        direct_failure: Some(direct_failure),
    })
}
