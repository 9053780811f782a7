//! Numeric carriers for the unit-interval lattices.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A number type that can represent points of `[0, 1]`.
///
/// Implemented for `f32`, `f64` and exact rationals. Floating-point carriers
/// compare with a tolerance, rationals compare exactly.
pub trait UnitScalar:
    Num + PartialOrd + Copy + Debug + Send + Sync + FromPrimitive + ToPrimitive + 'static
{
    /// Tolerance used when no explicit one is configured.
    fn default_tolerance() -> Self;

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn clamp_unit(self) -> Self {
        self.max_of(Self::zero()).min_of(Self::one())
    }

    fn from_fraction(numer: u32, denom: u32) -> Self {
        Self::from_u32(numer).expect("small integer") / Self::from_u32(denom).expect("small integer")
    }
}

impl UnitScalar for f64 {
    fn default_tolerance() -> Self {
        1e-9
    }
}

impl UnitScalar for f32 {
    fn default_tolerance() -> Self {
        1e-6
    }
}

impl UnitScalar for Ratio<i64> {
    fn default_tolerance() -> Self {
        Ratio::from_integer(0)
    }
}
