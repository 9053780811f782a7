//! Exhaustive checks of operator axioms over small finite lattices.
//!
//! An operator is given as an [`OperatorTable`]. Each axiom is tested on every
//! instance in a fixed enumeration order, so the first violation found is the
//! same on every run.

mod counterexamples;
mod duality;
mod galois;
pub mod io;
mod reconstruct;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::approx::{Direction, Pair};
use crate::error::{Error, Result};
use crate::fuzzy_set::{co_singleton, is_subset, set_equiv, singleton, FuzzySet};
use crate::lattice::ResiduatedLattice;

pub use counterexamples::{counterexample, Counterexample, COUNTEREXAMPLES};
pub use duality::{check_duality, check_duality_with, unit_grid, DualityVerdict};
pub use galois::{check_galois, check_galois_pair, galois_maps, GaloisMaps, GaloisVerdict};
pub use reconstruct::{reconstruct_covering, Reconstruction, ReconstructionMethod};
pub use table::{OperatorTable, MAX_CARRIER, MAX_UNIVERSE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AxiomId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L7,
    L8,
    L9,
    U1,
    U2,
    U3,
    U4,
    U5,
    U6,
    U7,
    U8,
    U9,
    /// `g(X) < β → X` as a strict set inequality.
    L3Strict,
    /// `g(A) > β ⊗ A` as a strict set inequality.
    U3Strict,
}

impl AxiomId {
    pub const ALL: [AxiomId; 20] = [
        AxiomId::L1,
        AxiomId::L2,
        AxiomId::L3,
        AxiomId::L4,
        AxiomId::L5,
        AxiomId::L6,
        AxiomId::L7,
        AxiomId::L8,
        AxiomId::L9,
        AxiomId::U1,
        AxiomId::U2,
        AxiomId::U3,
        AxiomId::U4,
        AxiomId::U5,
        AxiomId::U6,
        AxiomId::U7,
        AxiomId::U8,
        AxiomId::U9,
        AxiomId::L3Strict,
        AxiomId::U3Strict,
    ];

    pub fn name(self) -> &'static str {
        use AxiomId::*;
        match self {
            L1 => "L1",
            L2 => "L2",
            L3 => "L3",
            L4 => "L4",
            L5 => "L5",
            L6 => "L6",
            L7 => "L7",
            L8 => "L8",
            L9 => "L9",
            U1 => "U1",
            U2 => "U2",
            U3 => "U3",
            U4 => "U4",
            U5 => "U5",
            U6 => "U6",
            U7 => "U7",
            U8 => "U8",
            U9 => "U9",
            L3Strict => "L3-strict",
            U3Strict => "U3-strict",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(t) || a.name().replace('-', "").eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

/// The axioms that characterize one operator.
pub fn theorem_axioms(pair: Pair, dir: Direction) -> &'static [AxiomId] {
    use AxiomId::*;
    match (pair, dir) {
        (Pair::One, Direction::Lower) => &[L1, L2, L3, L4, L5],
        (Pair::One, Direction::Upper) => &[U1, U2, U3, U4, U5],
        (Pair::Two, Direction::Lower) => &[L3, L6, L7, L8],
        (Pair::Two, Direction::Upper) => &[U3, U6, U7, U8],
        (Pair::Three, Direction::Lower) => &[L3, L6, L7, L9],
        (Pair::Three, Direction::Upper) => &[U3, U6, U7, U9],
    }
}

/// What the lattice must be for the characterization of `(pair, dir)` to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeRequirement {
    pub regular: bool,
    pub heyting: bool,
}

pub fn lattice_requirement(pair: Pair, dir: Direction) -> LatticeRequirement {
    let (regular, heyting) = match (pair, dir) {
        (Pair::One, Direction::Lower) => (false, false),
        (Pair::One, Direction::Upper) => (true, false),
        (Pair::Two | Pair::Three, Direction::Upper) => (false, true),
        (Pair::Two | Pair::Three, Direction::Lower) => (true, true),
    };
    LatticeRequirement { regular, heyting }
}

/// Errors with `LatticePreconditionUnmet` unless `l` meets the requirement.
pub fn check_lattice_requirement<L: ResiduatedLattice>(l: &L, pair: Pair, dir: Direction) -> Result<()> {
    let req = lattice_requirement(pair, dir);
    let mut missing = Vec::new();
    if req.regular && !l.is_regular()? {
        missing.push("regular");
    }
    if req.heyting && !l.is_heyting()? {
        missing.push("Heyting");
    }
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Error::LatticePreconditionUnmet(format!(
            "pair {pair} {dir} needs a {} lattice, {} is not",
            missing.join(" "),
            l.name()
        )))
    }
}

/// The instance an axiom failed on.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<V> {
    /// Fuzzy-set arguments; for L7/U7 the whole family.
    pub sets: Vec<FuzzySet<V>>,
    /// Scalar `α`, when the axiom has one.
    pub scalars: Vec<V>,
    /// Universe indices `x`, `y`, when the axiom has them.
    pub points: Vec<usize>,
}

impl<V> Witness<V> {
    pub fn scaled(set: FuzzySet<V>, alpha: V) -> Self {
        Witness { sets: vec![set], scalars: vec![alpha], points: Vec::new() }
    }

    pub fn sets(sets: Vec<FuzzySet<V>>) -> Self {
        Witness { sets, scalars: Vec::new(), points: Vec::new() }
    }

    pub fn points(points: Vec<usize>) -> Self {
        Witness { sets: Vec::new(), scalars: Vec::new(), points }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomVerdict<V> {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witness: Option<Witness<V>>,
}

impl<V: Copy> AxiomVerdict<V> {
    /// Re-evaluates the recorded witness: true when it still violates the axiom.
    pub fn recheck<L: ResiduatedLattice<Value = V>>(&self, g: &OperatorTable<L>, beta: V) -> bool {
        self.witness.as_ref().is_some_and(|w| violates(g, beta, self.axiom, w))
    }
}

/// Whether the instance `w` violates `axiom`. `w` must have the shape the
/// axiom expects (see [`Witness`]).
pub fn violated_at<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value, axiom: AxiomId, w: &Witness<L::Value>) -> bool {
    violates(g, beta, axiom, w)
}

fn candidates<L: ResiduatedLattice>(g: &OperatorTable<L>, axiom: AxiomId) -> Box<dyn Iterator<Item = Witness<L::Value>> + '_> {
    use AxiomId::*;
    let dom = g.domain();
    let n = g.universe().len();
    let carrier = g.lattice().carrier().expect("operator tables are finite");
    match axiom {
        L1 => Box::new((0..n).map(|x| Witness::points(vec![x]))),
        U1 => Box::new(std::iter::once(Witness::sets(Vec::new()))),
        L2 | U2 => Box::new(
            dom.iter()
                .flat_map(move |a| dom.iter().map(move |b| Witness::sets(vec![a.clone(), b.clone()]))),
        ),
        L3 | U3 | L3Strict | U3Strict | L4 | U4 | L9 | U9 => {
            Box::new(dom.iter().map(|x| Witness::sets(vec![x.clone()])))
        }
        L5 | U5 | L6 | U6 => Box::new(carrier.into_iter().flat_map(move |a| {
            dom.iter().map(move |x| Witness { sets: vec![x.clone()], scalars: vec![a], points: Vec::new() })
        })),
        L7 | U7 => {
            let empty = std::iter::once(Witness::sets(Vec::new()));
            let single = dom.iter().map(|x| Witness::sets(vec![x.clone()]));
            let pairs = dom.iter().enumerate().flat_map(move |(i, a)| {
                dom[i + 1..].iter().map(move |b| Witness::sets(vec![a.clone(), b.clone()]))
            });
            Box::new(empty.chain(single).chain(pairs))
        }
        L8 | U8 => Box::new((0..n).flat_map(move |x| (0..n).map(move |y| Witness::points(vec![x, y])))),
    }
}

fn violates<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value, axiom: AxiomId, w: &Witness<L::Value>) -> bool {
    use AxiomId::*;
    let l = g.lattice();
    let u = g.universe();
    let ap = |x: &FuzzySet<L::Value>| g.apply(x).clone();
    let tn = |a: L::Value, x: &FuzzySet<L::Value>| x.map(|v| l.tnorm(a, v));
    let im = |a: L::Value, x: &FuzzySet<L::Value>| x.map(|v| l.implication(a, v));
    let top = FuzzySet::constant(u, l.top());
    let bot = FuzzySet::constant(u, l.bottom());
    let set = |i: usize| &w.sets[i];
    match axiom {
        L1 => !l.le(beta, ap(&top).get(w.points[0])),
        U1 => !set_equiv(l, &ap(&bot), &bot),
        L2 | U2 => is_subset(l, set(0), set(1)) && !is_subset(l, &ap(set(0)), &ap(set(1))),
        L3 => !is_subset(l, &ap(set(0)), &im(beta, set(0))),
        U3 => !is_subset(l, &tn(beta, set(0)), &ap(set(0))),
        L3Strict => {
            let (gx, bound) = (ap(set(0)), im(beta, set(0)));
            !(is_subset(l, &gx, &bound) && !set_equiv(l, &gx, &bound))
        }
        U3Strict => {
            let (gx, bound) = (ap(set(0)), tn(beta, set(0)));
            !(is_subset(l, &bound, &gx) && !set_equiv(l, &gx, &bound))
        }
        L4 => {
            let gx = ap(set(0));
            !is_subset(l, &gx, &ap(&tn(beta, &gx)))
        }
        U4 => {
            let gx = ap(set(0));
            !is_subset(l, &ap(&im(beta, &gx)), &gx)
        }
        L5 => {
            let a = w.scalars[0];
            !is_subset(l, &tn(a, &ap(set(0))), &ap(&tn(a, set(0))))
        }
        U5 => {
            let a = w.scalars[0];
            !is_subset(l, &ap(&im(a, set(0))), &im(a, &ap(set(0))))
        }
        L6 => {
            let a = w.scalars[0];
            !set_equiv(l, &im(a, &ap(set(0))), &ap(&im(a, set(0))))
        }
        U6 => {
            let a = w.scalars[0];
            !set_equiv(l, &tn(a, &ap(set(0))), &ap(&tn(a, set(0))))
        }
        L7 | U7 => {
            let meet = axiom == L7;
            let fold = |sets: &mut dyn Iterator<Item = FuzzySet<L::Value>>| {
                let init = if meet { top.clone() } else { bot.clone() };
                sets.fold(init, |acc, s| {
                    acc.zip_with(&s, |p, q| if meet { l.meet(p, q) } else { l.join(p, q) }).expect("same universe")
                })
            };
            let lhs = ap(&fold(&mut w.sets.iter().cloned()));
            let rhs = fold(&mut w.sets.iter().map(ap));
            !set_equiv(l, &lhs, &rhs)
        }
        L8 => {
            let (x, y) = (w.points[0], w.points[1]);
            let a = ap(&co_singleton(l, u, x)).get(y);
            let b = ap(&co_singleton(l, u, y)).get(x);
            !(l.equiv(a, b) && l.le(l.negation(beta), a))
        }
        U8 => {
            let (x, y) = (w.points[0], w.points[1]);
            let a = ap(&singleton(l, u, x)).get(y);
            let b = ap(&singleton(l, u, y)).get(x);
            !(l.equiv(a, b) && l.le(a, beta))
        }
        L9 => {
            let gx = ap(set(0));
            !is_subset(l, &im(beta, &gx), &ap(&gx))
        }
        U9 => {
            let gx = ap(set(0));
            !is_subset(l, &ap(&gx), &tn(beta, &gx))
        }
    }
}

/// Tests one axiom on every instance; the witness is the first violation in
/// enumeration order.
pub fn check_axiom<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value, axiom: AxiomId) -> Result<AxiomVerdict<L::Value>> {
    crate::fuzzy_set::check_beta(g.lattice(), beta)?;
    let witness = candidates(g, axiom).find(|w| violates(g, beta, axiom, w));
    Ok(AxiomVerdict { axiom, holds: witness.is_none(), witness })
}

/// Like [`check_axiom`] with the axiom given by name.
pub fn check_axiom_named<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value, axiom: &str) -> Result<AxiomVerdict<L::Value>> {
    check_axiom(g, beta, axiom.parse()?)
}

/// Verdicts for every axiom, in [`AxiomId::ALL`] order.
pub fn check_all<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value) -> Result<Vec<AxiomVerdict<L::Value>>> {
    AxiomId::ALL.into_iter().map(|a| check_axiom(g, beta, a)).collect()
}

/// The axioms `g` satisfies.
pub fn classify_operator<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value) -> Result<Vec<AxiomId>> {
    Ok(check_all(g, beta)?.into_iter().filter(|v| v.holds).map(|v| v.axiom).collect())
}

/// The members of `axioms` that `g` fails.
pub fn failing<L: ResiduatedLattice>(g: &OperatorTable<L>, beta: L::Value, axioms: &[AxiomId]) -> Result<Vec<AxiomId>> {
    let mut out = Vec::new();
    for &a in axioms {
        if !check_axiom(g, beta, a)?.holds {
            out.push(a);
        }
    }
    Ok(out)
}
