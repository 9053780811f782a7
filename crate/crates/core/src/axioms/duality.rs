use crate::approx::{approximate, Direction, Pair};
use crate::covering::BetaCovering;
use crate::error::Result;
use crate::fuzzy_set::FuzzySet;
use crate::lattice::ResiduatedLattice;
use crate::scalar::UnitScalar;

#[derive(Clone, Debug, PartialEq)]
pub struct DualityVerdict<V> {
    pub pair: Pair,
    pub holds: bool,
    /// The operator computed directly.
    pub direct: FuzzySet<V>,
    /// The same operator obtained from its dual.
    pub via_dual: FuzzySet<V>,
    /// First universe index where the two differ.
    pub witness: Option<usize>,
}

/// `{0, 0.05, …, 1}` together with `extra`, sorted and deduplicated.
pub fn unit_grid<T: UnitScalar>(extra: &[T]) -> Vec<T> {
    let mut out: Vec<T> = (0..=20).map(|i| T::from_fraction(i, 20)).collect();
    out.extend_from_slice(extra);
    out.sort_by(|a, b| a.partial_cmp(b).expect("unit values are ordered"));
    out.dedup();
    out
}

/// Operator reached directly, and the operator whose dual yields it.
fn roles(pair: Pair) -> (Direction, Direction) {
    match pair {
        Pair::One => (Direction::Upper, Direction::Lower),
        Pair::Two | Pair::Three => (Direction::Lower, Direction::Upper),
    }
}

/// Checks `upper1(X) = ⋀_b (lower1(X → b) → b)`, and for pairs 2 and 3
/// `lower(X) = ⋀_b (upper(X → b) → b)`, with `b` ranging over `bs`.
pub fn check_duality_with<L: ResiduatedLattice>(
    c: &BetaCovering<L>,
    x: &FuzzySet<L::Value>,
    pair: Pair,
    bs: &[L::Value],
) -> Result<DualityVerdict<L::Value>> {
    let l = c.lattice();
    let (target, dual) = roles(pair);
    let direct = approximate(c, x, pair, target)?;
    let mut acc = FuzzySet::constant(c.universe(), l.top());
    for &b in bs {
        l.check(b)?;
        let shifted = x.map(|v| l.implication(v, b));
        let d = approximate(c, &shifted, pair, dual)?;
        acc = acc.zip_with(&d, |a, v| l.meet(a, l.implication(v, b)))?;
    }
    let witness = (0..x.len()).find(|&i| !l.equiv(direct.get(i), acc.get(i)));
    Ok(DualityVerdict { pair, holds: witness.is_none(), direct, via_dual: acc, witness })
}

/// [`check_duality_with`] over the whole carrier for finite lattices; otherwise
/// over the bounds and every value of `X` and of both operators on `X`.
pub fn check_duality<L: ResiduatedLattice>(
    c: &BetaCovering<L>,
    x: &FuzzySet<L::Value>,
    pair: Pair,
) -> Result<DualityVerdict<L::Value>> {
    let l = c.lattice();
    let bs = match l.carrier() {
        Some(all) => all,
        None => {
            let mut bs = vec![l.bottom(), l.top()];
            bs.extend_from_slice(x.values());
            for dir in Direction::ALL {
                bs.extend_from_slice(approximate(c, x, pair, dir)?.values());
            }
            bs
        }
    };
    check_duality_with(c, x, pair, &bs)
}
