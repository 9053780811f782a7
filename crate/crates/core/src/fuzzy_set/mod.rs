//! L-fuzzy sets on a finite universe and the subsethood and intersection functionals.

pub mod laws;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::ResiduatedLattice;

/// An ordered, non-empty list of distinct element labels.
///
/// Cloning is cheap; universes compare by their labels.
#[derive(Clone)]
pub struct Universe(Arc<Vec<String>>);

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::BadUniverse("universe is empty".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::BadUniverse("empty label".into()));
            }
            if labels[..i].contains(l) {
                return Err(Error::BadUniverse(format!("duplicate label {l}")));
            }
        }
        Ok(Universe(Arc::new(labels)))
    }

    /// `x1, …, xn`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A map from universe elements to lattice values, stored densely in universe order.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySet<V> {
    universe: Universe,
    values: Vec<V>,
}

impl<V: Copy> FuzzySet<V> {
    pub fn new(universe: &Universe, values: Vec<V>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::LengthMismatch { expected: universe.len(), found: values.len() });
        }
        Ok(FuzzySet { universe: universe.clone(), values })
    }

    /// As [`new`](Self::new), also checking that every value belongs to `lat`.
    pub fn new_in<L: ResiduatedLattice<Value = V>>(lat: &L, universe: &Universe, values: Vec<V>) -> Result<Self> {
        for &v in &values {
            lat.check(v)?;
        }
        Self::new(universe, values)
    }

    pub fn constant(universe: &Universe, v: V) -> Self {
        FuzzySet { universe: universe.clone(), values: vec![v; universe.len()] }
    }

    pub fn from_fn(universe: &Universe, f: impl FnMut(usize) -> V) -> Self {
        FuzzySet { universe: universe.clone(), values: (0..universe.len()).map(f).collect() }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn into_values(self) -> Vec<V> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> V {
        self.values[i]
    }

    pub fn at(&self, label: &str) -> Result<V> {
        Ok(self.values[self.universe.index_of(label)?])
    }

    pub fn map(&self, f: impl FnMut(V) -> V) -> Self {
        FuzzySet { universe: self.universe.clone(), values: self.values.iter().copied().map(f).collect() }
    }

    pub fn zip_with(&self, other: &Self, mut f: impl FnMut(V, V) -> V) -> Result<Self> {
        same_universe(self, other)?;
        Ok(FuzzySet {
            universe: self.universe.clone(),
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        })
    }
}

pub(crate) fn same_universe<V>(a: &FuzzySet<V>, b: &FuzzySet<V>) -> Result<()> {
    if a.universe == b.universe {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// `1_S`: top on the members of `labels`, bottom elsewhere.
pub fn characteristic<L: ResiduatedLattice, S: AsRef<str>>(
    lat: &L,
    universe: &Universe,
    labels: &[S],
) -> Result<FuzzySet<L::Value>> {
    let mut values = vec![lat.bottom(); universe.len()];
    for l in labels {
        values[universe.index_of(l.as_ref())?] = lat.top();
    }
    FuzzySet::new(universe, values)
}

/// `1_{x}` for the element at index `i`.
pub fn singleton<L: ResiduatedLattice>(lat: &L, universe: &Universe, i: usize) -> FuzzySet<L::Value> {
    FuzzySet::from_fn(universe, |j| if i == j { lat.top() } else { lat.bottom() })
}

/// `1_{U−{x}}` for the element at index `i`.
pub fn co_singleton<L: ResiduatedLattice>(lat: &L, universe: &Universe, i: usize) -> FuzzySet<L::Value> {
    FuzzySet::from_fn(universe, |j| if i == j { lat.bottom() } else { lat.top() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointwiseOp {
    TNorm,
    Implication,
    Meet,
    Join,
}

/// One side of a pointwise operation: a set, or a scalar read as a constant set.
#[derive(Clone, Copy, Debug)]
pub enum Operand<'a, V> {
    Set(&'a FuzzySet<V>),
    Scalar(V),
}

impl<'a, V> From<&'a FuzzySet<V>> for Operand<'a, V> {
    fn from(s: &'a FuzzySet<V>) -> Self {
        Operand::Set(s)
    }
}

pub fn apply<L: ResiduatedLattice>(lat: &L, op: PointwiseOp, a: L::Value, b: L::Value) -> L::Value {
    match op {
        PointwiseOp::TNorm => lat.tnorm(a, b),
        PointwiseOp::Implication => lat.implication(a, b),
        PointwiseOp::Meet => lat.meet(a, b),
        PointwiseOp::Join => lat.join(a, b),
    }
}

/// Elementwise `op`. At least one operand must be a set.
pub fn pointwise<L: ResiduatedLattice>(
    lat: &L,
    op: PointwiseOp,
    a: Operand<'_, L::Value>,
    b: Operand<'_, L::Value>,
) -> Result<FuzzySet<L::Value>> {
    match (a, b) {
        (Operand::Set(x), Operand::Set(y)) => x.zip_with(y, |p, q| apply(lat, op, p, q)),
        (Operand::Scalar(s), Operand::Set(y)) => {
            lat.check(s)?;
            Ok(y.map(|q| apply(lat, op, s, q)))
        }
        (Operand::Set(x), Operand::Scalar(s)) => {
            lat.check(s)?;
            Ok(x.map(|p| apply(lat, op, p, s)))
        }
        (Operand::Scalar(_), Operand::Scalar(_)) => Err(Error::ScalarOnly),
    }
}

/// Pointwise order `A ≤ B`.
pub fn is_subset<L: ResiduatedLattice>(lat: &L, a: &FuzzySet<L::Value>, b: &FuzzySet<L::Value>) -> bool {
    a.values.iter().zip(&b.values).all(|(&p, &q)| lat.le(p, q))
}

/// Pointwise equality under the lattice's notion of equality.
pub fn set_equiv<L: ResiduatedLattice>(lat: &L, a: &FuzzySet<L::Value>, b: &FuzzySet<L::Value>) -> bool {
    a.len() == b.len() && a.values.iter().zip(&b.values).all(|(&p, &q)| lat.equiv(p, q))
}

/// `S(A, B) = ⋀ₓ A(x) → B(x)`.
pub fn subsethood<L: ResiduatedLattice>(lat: &L, a: &FuzzySet<L::Value>, b: &FuzzySet<L::Value>) -> Result<L::Value> {
    same_universe(a, b)?;
    Ok(subsethood_of(lat, &a.values, &b.values))
}

/// `N(A, B) = ⋁ₓ A(x) ⊗ B(x)`.
pub fn intersection_degree<L: ResiduatedLattice>(
    lat: &L,
    a: &FuzzySet<L::Value>,
    b: &FuzzySet<L::Value>,
) -> Result<L::Value> {
    same_universe(a, b)?;
    Ok(intersection_of(lat, &a.values, &b.values))
}

pub(crate) fn subsethood_of<L: ResiduatedLattice>(lat: &L, a: &[L::Value], b: &[L::Value]) -> L::Value {
    lat.meet_all(a.iter().zip(b).map(|(&p, &q)| lat.implication(p, q)))
}

pub(crate) fn intersection_of<L: ResiduatedLattice>(lat: &L, a: &[L::Value], b: &[L::Value]) -> L::Value {
    lat.join_all(a.iter().zip(b).map(|(&p, &q)| lat.tnorm(p, q)))
}

/// Rejects a threshold that is not strictly above the bottom.
pub fn check_beta<L: ResiduatedLattice>(lat: &L, beta: L::Value) -> Result<L::Value> {
    lat.check(beta)?;
    if lat.is_positive(beta) {
        Ok(beta)
    } else {
        Err(Error::BetaZero)
    }
}

/// `S^β(A, B) = β → S(A, B)`.
pub fn subsethood_beta<L: ResiduatedLattice>(
    lat: &L,
    a: &FuzzySet<L::Value>,
    b: &FuzzySet<L::Value>,
    beta: L::Value,
) -> Result<L::Value> {
    check_beta(lat, beta)?;
    Ok(lat.implication(beta, subsethood(lat, a, b)?))
}

/// `N^β(A, B) = N(A, B) ⊗ β`.
pub fn intersection_beta<L: ResiduatedLattice>(
    lat: &L,
    a: &FuzzySet<L::Value>,
    b: &FuzzySet<L::Value>,
    beta: L::Value,
) -> Result<L::Value> {
    check_beta(lat, beta)?;
    Ok(lat.tnorm(intersection_degree(lat, a, b)?, beta))
}

/// `A ≤_β B`, i.e. `S(A, B) ≥ β`.
pub fn le_beta<L: ResiduatedLattice>(
    lat: &L,
    a: &FuzzySet<L::Value>,
    b: &FuzzySet<L::Value>,
    beta: L::Value,
) -> Result<bool> {
    check_beta(lat, beta)?;
    Ok(lat.le(beta, subsethood(lat, a, b)?))
}

/// Every L-fuzzy set on `universe`, for a finite lattice.
///
/// Sets are listed in the lexicographic order of their value indices, the
/// first universe element varying slowest. Returns `TableTooLarge` beyond
/// `limit` sets.
pub fn all_sets<L: ResiduatedLattice>(lat: &L, universe: &Universe, limit: usize) -> Result<Vec<FuzzySet<L::Value>>> {
    let carrier = lat.carrier().ok_or(Error::Undecidable("enumeration needs a finite carrier"))?;
    let (k, n) = (carrier.len(), universe.len());
    let total = (k as u128).checked_pow(n as u32).filter(|&t| t <= limit as u128);
    let Some(total) = total else {
        return Err(Error::TableTooLarge { universe: n, carrier: k });
    };
    Ok((0..total as usize)
        .map(|mut code| {
            let mut v = vec![carrier[0]; n];
            for slot in v.iter_mut().rev() {
                *slot = carrier[code % k];
                code /= k;
            }
            FuzzySet { universe: universe.clone(), values: v }
        })
        .collect())
}
