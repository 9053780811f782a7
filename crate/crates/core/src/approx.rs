//! The three pairs of lower and upper approximation operators, from their definitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::covering::BetaCovering;
use crate::error::{Error, Result};
use crate::fuzzy_set::{intersection_of, subsethood_of, FuzzySet};
use crate::lattice::ResiduatedLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pair {
    One,
    Two,
    Three,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::One, Pair::Two, Pair::Three];

    pub fn number(self) -> u8 {
        match self {
            Pair::One => 1,
            Pair::Two => 2,
            Pair::Three => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Pair::One),
            2 => Some(Pair::Two),
            3 => Some(Pair::Three),
            _ => None,
        }
    }
}

impl Direction {
    pub const ALL: [Direction; 2] = [Direction::Lower, Direction::Upper];
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        })
    }
}

impl FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<u8>().ok().and_then(Pair::from_number).ok_or_else(|| Error::Parse(format!("pair {s}")))
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Direction::Lower),
            "upper" => Ok(Direction::Upper),
            _ => Err(Error::Parse(format!("direction {s}"))),
        }
    }
}

/// `S^β(C, X)` for every member.
fn member_subsethoods<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Vec<L::Value> {
    let l = c.lattice();
    c.members().iter().map(|m| l.implication(c.beta(), subsethood_of(l, m.values(), x.values()))).collect()
}

/// `N^β(C, X)` for every member.
fn member_intersections<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Vec<L::Value> {
    let l = c.lattice();
    c.members().iter().map(|m| l.tnorm(intersection_of(l, m.values(), x.values()), c.beta())).collect()
}

fn pointwise_over_members<L: ResiduatedLattice>(
    c: &BetaCovering<L>,
    x: &FuzzySet<L::Value>,
    weights: &[L::Value],
    join: bool,
) -> FuzzySet<L::Value> {
    let l = c.lattice();
    FuzzySet::from_fn(x.universe(), |i| {
        let terms = c.members().iter().zip(weights).map(|(m, &w)| {
            if join {
                l.tnorm(m.get(i), w)
            } else {
                l.implication(m.get(i), w)
            }
        });
        if join {
            l.join_all(terms)
        } else {
            l.meet_all(terms)
        }
    })
}

/// `⋁_C C ⊗ S^β(C, X)`.
pub fn lower1<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Result<FuzzySet<L::Value>> {
    c.check_target(x)?;
    Ok(pointwise_over_members(c, x, &member_subsethoods(c, x), true))
}

/// `⋀_C C → N^β(C, X)`.
pub fn upper1<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Result<FuzzySet<L::Value>> {
    c.check_target(x)?;
    Ok(pointwise_over_members(c, x, &member_intersections(c, x), false))
}

/// `⋀_C C → S^β(C, X)`.
pub fn lower2<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Result<FuzzySet<L::Value>> {
    c.check_target(x)?;
    Ok(pointwise_over_members(c, x, &member_subsethoods(c, x), false))
}

/// `⋁_C C ⊗ N^β(C, X)`.
pub fn upper2<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Result<FuzzySet<L::Value>> {
    c.check_target(x)?;
    Ok(pointwise_over_members(c, x, &member_intersections(c, x), true))
}

/// `x ↦ S^β(R(−, x), X)` with `R` the covering's arrow relation.
pub fn lower3<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Result<FuzzySet<L::Value>> {
    c.check_target(x)?;
    let l = c.lattice();
    let r = c.relation_arrow();
    Ok(FuzzySet::from_fn(x.universe(), |p| {
        let s = l.meet_all((0..x.len()).map(|y| l.implication(r.get(y, p), x.get(y))));
        l.implication(c.beta(), s)
    }))
}

/// `x ↦ N^β(R(−, x), X)`.
pub fn upper3<L: ResiduatedLattice>(c: &BetaCovering<L>, x: &FuzzySet<L::Value>) -> Result<FuzzySet<L::Value>> {
    c.check_target(x)?;
    let l = c.lattice();
    let r = c.relation_arrow();
    Ok(FuzzySet::from_fn(x.universe(), |p| {
        let n = l.join_all((0..x.len()).map(|y| l.tnorm(r.get(y, p), x.get(y))));
        l.tnorm(n, c.beta())
    }))
}

pub fn approximate<L: ResiduatedLattice>(
    c: &BetaCovering<L>,
    x: &FuzzySet<L::Value>,
    pair: Pair,
    dir: Direction,
) -> Result<FuzzySet<L::Value>> {
    match (pair, dir) {
        (Pair::One, Direction::Lower) => lower1(c, x),
        (Pair::One, Direction::Upper) => upper1(c, x),
        (Pair::Two, Direction::Lower) => lower2(c, x),
        (Pair::Two, Direction::Upper) => upper2(c, x),
        (Pair::Three, Direction::Lower) => lower3(c, x),
        (Pair::Three, Direction::Upper) => upper3(c, x),
    }
}
