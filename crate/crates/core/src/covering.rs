//! L-fuzzy β-coverings and the relations they induce.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fuzzy_set::{check_beta, set_equiv, FuzzySet, Universe};
use crate::lattice::ResiduatedLattice;
use crate::lmatrix::LatticeMatrix;

/// A named family of fuzzy sets whose pointwise join is at least `β` everywhere.
///
/// Members keep insertion order. The relation `R(x, y) = ⋀_C C(x) → C(y)` is
/// computed on first use and cached.
#[derive(Clone, Debug)]
pub struct BetaCovering<L: ResiduatedLattice> {
    lattice: L,
    universe: Universe,
    names: Vec<String>,
    members: Vec<FuzzySet<L::Value>>,
    beta: L::Value,
    arrow: OnceLock<LatticeMatrix<L::Value>>,
}

/// `⋀ₓ ⋁_C C(x)`: the largest threshold for which `members` is a covering.
pub fn max_beta<L: ResiduatedLattice>(l: &L, members: &[FuzzySet<L::Value>]) -> Result<L::Value> {
    let first = members.first().ok_or(Error::EmptyCovering)?;
    let n = first.len();
    Ok(l.meet_all((0..n).map(|i| l.join_all(members.iter().map(|c| c.get(i))))))
}

/// Builds a covering with members named `C1, C2, …`.
pub fn validate_covering<L: ResiduatedLattice>(
    l: &L,
    members: Vec<FuzzySet<L::Value>>,
    beta: L::Value,
) -> Result<BetaCovering<L>> {
    let named = members.into_iter().enumerate().map(|(i, m)| (format!("C{}", i + 1), m)).collect();
    BetaCovering::new(l.clone(), named, beta)
}

impl<L: ResiduatedLattice> BetaCovering<L> {
    pub fn new(lattice: L, members: Vec<(String, FuzzySet<L::Value>)>, beta: L::Value) -> Result<Self> {
        check_beta(&lattice, beta)?;
        let universe = members.first().ok_or(Error::EmptyCovering)?.1.universe().clone();
        let mut names: Vec<String> = Vec::with_capacity(members.len());
        let mut sets = Vec::with_capacity(members.len());
        for (name, set) in members {
            if names.contains(&name) {
                return Err(Error::DuplicateMember(name));
            }
            if set.universe() != &universe {
                return Err(Error::UniverseMismatch);
            }
            for &v in set.values() {
                lattice.check(v)?;
            }
            names.push(name);
            sets.push(set);
        }
        for i in 0..universe.len() {
            let j = lattice.join_all(sets.iter().map(|c| c.get(i)));
            if !lattice.le(beta, j) {
                return Err(Error::NotACovering { point: universe.label(i).to_string() });
            }
        }
        Ok(BetaCovering { lattice, universe, names, members: sets, beta, arrow: OnceLock::new() })
    }

    pub fn lattice(&self) -> &L {
        &self.lattice
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn beta(&self) -> L::Value {
        self.beta
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn members(&self) -> &[FuzzySet<L::Value>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownMember(name.to_string()))
    }

    pub fn member(&self, name: &str) -> Result<&FuzzySet<L::Value>> {
        Ok(&self.members[self.index_of(name)?])
    }

    pub fn named_members(&self) -> impl Iterator<Item = (&str, &FuzzySet<L::Value>)> {
        self.names.iter().map(String::as_str).zip(&self.members)
    }

    /// `⋀ₓ ⋁_C C(x)` for this family.
    pub fn max_beta(&self) -> L::Value {
        max_beta(&self.lattice, &self.members).expect("non-empty")
    }

    /// The same family at another threshold.
    pub fn with_beta(&self, beta: L::Value) -> Result<Self> {
        Self::new(self.lattice.clone(), self.pairs(0..self.len()), beta)
    }

    /// The members at `indices`, in the given order, at the same threshold.
    pub fn subfamily(&self, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(self.lattice.clone(), self.pairs(indices), self.beta)
    }

    /// The family without the member at `index`.
    pub fn without(&self, index: usize) -> Result<Self> {
        self.subfamily((0..self.len()).filter(|&i| i != index))
    }

    fn pairs(&self, indices: impl IntoIterator<Item = usize>) -> Vec<(String, FuzzySet<L::Value>)> {
        indices.into_iter().map(|i| (self.names[i].clone(), self.members[i].clone())).collect()
    }

    /// Pairs `(later, earlier)` of members with identical values.
    pub fn duplicates(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if let Some(j) = (0..i).find(|&j| set_equiv(&self.lattice, &self.members[i], &self.members[j])) {
                out.push((i, j));
            }
        }
        out
    }

    pub(crate) fn check_target(&self, x: &FuzzySet<L::Value>) -> Result<()> {
        if x.universe() != &self.universe {
            return Err(Error::UniverseMismatch);
        }
        for &v in x.values() {
            self.lattice.check(v)?;
        }
        Ok(())
    }

    /// `R(x, y) = ⋀_C C(x) → C(y)`, reflexive and ⊗-transitive.
    pub fn relation_arrow(&self) -> &LatticeMatrix<L::Value> {
        self.arrow.get_or_init(|| {
            let l = &self.lattice;
            let n = self.universe.len();
            LatticeMatrix::from_fn(n, n, |x, y| {
                l.meet_all(self.members.iter().map(|c| l.implication(c.get(x), c.get(y))))
            })
        })
    }

    /// `R(x, y) = ⋁_C C(x) ⊗ C(y)`, symmetric.
    pub fn relation_sym(&self) -> LatticeMatrix<L::Value> {
        let l = &self.lattice;
        let n = self.universe.len();
        LatticeMatrix::from_fn(n, n, |x, y| l.join_all(self.members.iter().map(|c| l.tnorm(c.get(x), c.get(y)))))
    }
}

/// Same lattice values, member by member, regardless of names.
pub fn same_members<L: ResiduatedLattice>(a: &BetaCovering<L>, b: &BetaCovering<L>) -> bool {
    a.len() == b.len() && a.members.iter().zip(&b.members).all(|(x, y)| set_equiv(&a.lattice, x, y))
}
