use crate::approx::{approximate, Direction, Pair};
use crate::covering::BetaCovering;
use crate::error::{Error, Result};
use crate::fuzzy_set::{all_sets, set_equiv, FuzzySet, Universe};
use crate::lattice::ResiduatedLattice;

/// Largest universe an operator table may range over.
pub const MAX_UNIVERSE: usize = 3;
/// Largest carrier an operator table may range over.
pub const MAX_CARRIER: usize = 4;

/// An operator `g: L^U → L^U` listed in full.
///
/// The domain is every fuzzy set on the universe, in the canonical order of
/// [`all_sets`]; `images[i]` is the value of `g` on `domain[i]`.
#[derive(Clone, Debug)]
pub struct OperatorTable<L: ResiduatedLattice> {
    lattice: L,
    universe: Universe,
    carrier: Vec<L::Value>,
    domain: Vec<FuzzySet<L::Value>>,
    images: Vec<FuzzySet<L::Value>>,
}

impl<L: ResiduatedLattice> OperatorTable<L> {
    /// Every fuzzy set on `universe`, under the size caps.
    pub fn domain_of(lattice: &L, universe: &Universe) -> Result<Vec<FuzzySet<L::Value>>> {
        let carrier = lattice.carrier().ok_or(Error::Undecidable("operator tables need a finite carrier"))?;
        if universe.len() > MAX_UNIVERSE || carrier.len() > MAX_CARRIER {
            return Err(Error::TableTooLarge { universe: universe.len(), carrier: carrier.len() });
        }
        all_sets(lattice, universe, usize::MAX)
    }

    pub fn from_fn(
        lattice: L,
        universe: &Universe,
        mut f: impl FnMut(&FuzzySet<L::Value>) -> Result<FuzzySet<L::Value>>,
    ) -> Result<Self> {
        let domain = Self::domain_of(&lattice, universe)?;
        let images = domain.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Self::from_images(lattice, universe, images)
    }

    /// Images listed in canonical domain order.
    pub fn from_images(lattice: L, universe: &Universe, images: Vec<FuzzySet<L::Value>>) -> Result<Self> {
        let domain = Self::domain_of(&lattice, universe)?;
        if images.len() != domain.len() {
            return Err(Error::LengthMismatch { expected: domain.len(), found: images.len() });
        }
        for im in &images {
            if im.universe() != universe {
                return Err(Error::UniverseMismatch);
            }
            for &v in im.values() {
                lattice.check(v)?;
            }
        }
        let carrier = lattice.carrier().expect("checked above");
        Ok(OperatorTable { lattice, universe: universe.clone(), carrier, domain, images })
    }

    /// The operator a covering induces for one pair and direction.
    pub fn from_covering(c: &BetaCovering<L>, pair: Pair, dir: Direction) -> Result<Self> {
        Self::from_fn(c.lattice().clone(), c.universe(), |x| approximate(c, x, pair, dir))
    }

    pub fn lattice(&self) -> &L {
        &self.lattice
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn domain(&self) -> &[FuzzySet<L::Value>] {
        &self.domain
    }

    pub fn images(&self) -> &[FuzzySet<L::Value>] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    /// Position of `x` in the canonical domain order.
    pub fn index_of(&self, x: &FuzzySet<L::Value>) -> usize {
        let k = self.carrier.len();
        x.values().iter().fold(0, |acc, v| {
            let pos = self.carrier.iter().position(|c| self.lattice.equiv(*c, *v)).expect("value in carrier");
            acc * k + pos
        })
    }

    pub fn apply(&self, x: &FuzzySet<L::Value>) -> &FuzzySet<L::Value> {
        &self.images[self.index_of(x)]
    }

    /// Same images on every input.
    pub fn same_as(&self, other: &Self) -> bool {
        self.len() == other.len() && self.images.iter().zip(&other.images).all(|(a, b)| set_equiv(&self.lattice, a, b))
    }

    /// First input on which the two tables differ.
    pub fn first_difference(&self, other: &Self) -> Option<&FuzzySet<L::Value>> {
        self.domain
            .iter()
            .zip(self.images.iter().zip(&other.images))
            .find(|(_, (a, b))| !set_equiv(&self.lattice, a, b))
            .map(|(x, _)| x)
    }
}
