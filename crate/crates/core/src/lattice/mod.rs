//! Complete residuated lattices: the algebra `(L, ∧, ∨, ⊗, →, 0, 1)`.
//!
//! Two families are provided. [`UnitInterval`] covers the Gödel, Łukasiewicz
//! and product structures on `[0, 1]` over any [`UnitScalar`](crate::UnitScalar);
//! [`FiniteLattice`] covers finite carriers given by order and operation tables,
//! validated exhaustively at construction.

mod descriptor;
mod finite;
pub mod laws;
mod unit;

use std::fmt::Debug;

use crate::error::{Error, Result};

pub use descriptor::{parse_decimal, AnyLattice, ChainTNorm, LatticeDescriptor, ValueCodec};
pub use finite::{Elem, FiniteLattice};
pub use unit::{TNormKind, UnitInterval};

/// A complete residuated lattice.
///
/// `le` is the lattice order; for floating-point carriers it honours the
/// configured tolerance, so `eq` is tolerance-aware as well.
pub trait ResiduatedLattice: Clone + Debug + Send + Sync {
    type Value: Copy + Debug + PartialEq + Send + Sync;

    fn bottom(&self) -> Self::Value;
    fn top(&self) -> Self::Value;
    fn le(&self, a: Self::Value, b: Self::Value) -> bool;
    fn meet(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn join(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    /// The monoid operation `⊗`.
    fn tnorm(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    /// The residuum `→` of `⊗`: the largest `c` with `a ⊗ c ≤ b`.
    fn implication(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn contains(&self, a: Self::Value) -> bool;
    /// The full carrier in a fixed order, when finite.
    fn carrier(&self) -> Option<Vec<Self::Value>>;
    /// Double negation law `¬¬a = a`.
    fn is_regular(&self) -> Result<bool>;
    /// Whether `⊗` coincides with `∧`.
    fn is_heyting(&self) -> Result<bool>;
    /// Short human-readable name of the structure.
    fn name(&self) -> String;
    /// Rendering of a value: carrier name for finite lattices, a number otherwise.
    fn format_value(&self, a: Self::Value, decimals: usize) -> String;
    /// Numeric reading of a value when the carrier is numeric.
    fn to_f64(&self, a: Self::Value) -> Option<f64>;

    fn equiv(&self, a: Self::Value, b: Self::Value) -> bool {
        self.le(a, b) && self.le(b, a)
    }

    fn lt(&self, a: Self::Value, b: Self::Value) -> bool {
        self.le(a, b) && !self.le(b, a)
    }

    /// `¬a = a → 0`.
    fn negation(&self, a: Self::Value) -> Self::Value {
        self.implication(a, self.bottom())
    }

    /// Strictly above bottom, in the lattice order.
    fn is_positive(&self, a: Self::Value) -> bool {
        !self.le(a, self.bottom())
    }

    fn meet_all<I: IntoIterator<Item = Self::Value>>(&self, values: I) -> Self::Value {
        values.into_iter().fold(self.top(), |acc, v| self.meet(acc, v))
    }

    fn join_all<I: IntoIterator<Item = Self::Value>>(&self, values: I) -> Self::Value {
        values.into_iter().fold(self.bottom(), |acc, v| self.join(acc, v))
    }

    fn check(&self, a: Self::Value) -> Result<Self::Value> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ForeignValue(format!("{a:?}")))
        }
    }

    fn try_tnorm(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(self.tnorm(self.check(a)?, self.check(b)?))
    }

    fn try_implication(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(self.implication(self.check(a)?, self.check(b)?))
    }

    fn try_negation(&self, a: Self::Value) -> Result<Self::Value> {
        Ok(self.negation(self.check(a)?))
    }
}
