//! L-fuzzy β-covering rough approximation operators over complete residuated lattices.
//!
//! The library is generic over the lattice ([`ResiduatedLattice`]) and, for the
//! unit interval, over the scalar type ([`UnitScalar`]). Concrete aliases for
//! the common choices live at the crate root.

pub mod approx;
pub mod axioms;
pub mod covering;
pub mod error;
pub mod fuzzy_set;
pub mod io;
pub mod lattice;
pub mod lmatrix;
pub mod reduction;
pub mod scalar;

pub use approx::{approximate, Direction, Pair};
pub use covering::{validate_covering, BetaCovering};
pub use error::{Error, Result};
pub use fuzzy_set::{FuzzySet, Universe};
pub use lattice::{
    AnyLattice, ChainTNorm, Elem, FiniteLattice, LatticeDescriptor, ResiduatedLattice, TNormKind, UnitInterval,
    ValueCodec,
};
pub use lmatrix::LatticeMatrix;
pub use scalar::UnitScalar;

/// Exact rational numbers used as unit-interval values.
pub type Rational = num_rational::Ratio<i64>;

pub type Unit64 = UnitInterval<f64>;
pub type Unit32 = UnitInterval<f32>;
pub type UnitExact = UnitInterval<Rational>;
