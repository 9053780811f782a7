use serde::{Deserialize, Serialize};

use super::ResiduatedLattice;
use crate::error::Result;
use crate::scalar::UnitScalar;

/// The three continuous t-norms offered on `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TNormKind {
    Godel,
    Lukasiewicz,
    Product,
}

/// `[0, 1]` with one of the standard t-norms and its residuum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitInterval<T> {
    kind: TNormKind,
    tol: T,
}

impl<T: UnitScalar> UnitInterval<T> {
    pub fn new(kind: TNormKind) -> Self {
        UnitInterval { kind, tol: T::default_tolerance() }
    }

    pub fn godel() -> Self {
        Self::new(TNormKind::Godel)
    }

    pub fn lukasiewicz() -> Self {
        Self::new(TNormKind::Lukasiewicz)
    }

    pub fn product() -> Self {
        Self::new(TNormKind::Product)
    }

    /// Replaces the comparison tolerance. Negative inputs are treated as zero.
    pub fn with_tolerance(mut self, tol: T) -> Self {
        self.tol = if tol < T::zero() { T::zero() } else { tol };
        self
    }

    pub fn kind(&self) -> TNormKind {
        self.kind
    }

    pub fn tolerance(&self) -> T {
        self.tol
    }
}

impl<T: UnitScalar> ResiduatedLattice for UnitInterval<T> {
    type Value = T;

    fn bottom(&self) -> T {
        T::zero()
    }

    fn top(&self) -> T {
        T::one()
    }

    fn le(&self, a: T, b: T) -> bool {
        a <= b + self.tol
    }

    fn meet(&self, a: T, b: T) -> T {
        a.min_of(b)
    }

    fn join(&self, a: T, b: T) -> T {
        a.max_of(b)
    }

    fn tnorm(&self, a: T, b: T) -> T {
        match self.kind {
            TNormKind::Godel => a.min_of(b),
            TNormKind::Lukasiewicz => (a + b - T::one()).max_of(T::zero()),
            TNormKind::Product => a * b,
        }
    }

    fn implication(&self, a: T, b: T) -> T {
        if self.le(a, b) {
            return T::one();
        }
        match self.kind {
            TNormKind::Godel => b,
            TNormKind::Lukasiewicz => (T::one() - a + b).clamp_unit(),
            TNormKind::Product => (b / a).clamp_unit(),
        }
    }

    fn contains(&self, a: T) -> bool {
        // NaN fails both comparisons.
        a >= T::zero() - self.tol && a <= T::one() + self.tol
    }

    fn carrier(&self) -> Option<Vec<T>> {
        None
    }

    fn is_regular(&self) -> Result<bool> {
        Ok(self.kind == TNormKind::Lukasiewicz)
    }

    fn is_heyting(&self) -> Result<bool> {
        Ok(self.kind == TNormKind::Godel)
    }

    fn name(&self) -> String {
        match self.kind {
            TNormKind::Godel => "godel",
            TNormKind::Lukasiewicz => "lukasiewicz",
            TNormKind::Product => "product",
        }
        .to_string()
    }

    fn format_value(&self, a: T, decimals: usize) -> String {
        format!("{:.*}", decimals, a.to_f64().unwrap_or(f64::NAN))
    }

    fn to_f64(&self, a: T) -> Option<f64> {
        a.to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn presets_match_closed_forms() {
        let g = UnitInterval::<f64>::godel();
        assert_eq!(g.tnorm(0.7, 0.4), 0.4);
        assert_eq!(g.tnorm(0.3, 0.5), 0.3);
        assert_eq!(g.implication(0.7, 0.4), 0.4);
        assert_eq!(g.negation(0.3), 0.0);

        let l = UnitInterval::<f64>::lukasiewicz();
        assert!((l.tnorm(0.9, 0.7) - 0.6).abs() < 1e-12);
        assert!((l.tnorm(0.9, 0.4) - 0.3).abs() < 1e-12);
        assert!((l.implication(0.9, 0.5) - 0.6).abs() < 1e-12);
        assert!((l.negation(0.3) - 0.7).abs() < 1e-12);

        let p = UnitInterval::<f64>::product();
        assert!((p.implication(0.8, 0.2) - 0.25).abs() < 1e-12);
        assert_eq!(p.implication(0.0, 0.3), 1.0);
    }

    #[test]
    fn exact_rationals() {
        let l = UnitInterval::<Ratio<i64>>::lukasiewicz();
        assert_eq!(l.tnorm(r(9, 10), r(7, 10)), r(3, 5));
        assert_eq!(l.implication(r(9, 10), r(1, 2)), r(3, 5));
        assert_eq!(l.negation(l.negation(r(3, 10))), r(3, 10));
    }

    #[test]
    fn tolerance_makes_near_equal_values_equal() {
        let l = UnitInterval::<f64>::lukasiewicz();
        let x = 0.1 + 0.2;
        assert!(l.equiv(x, 0.3));
        assert_eq!(l.implication(x, 0.3), 1.0);
        let strict = l.with_tolerance(0.0);
        assert!(!strict.equiv(x, 0.3));
    }

    #[test]
    fn foreign_values_are_rejected() {
        let g = UnitInterval::<f64>::godel();
        assert!(g.try_tnorm(1.5, 0.2).is_err());
        assert!(g.try_implication(0.2, f64::NAN).is_err());
        assert!(g.try_negation(-0.1).is_err());
    }

    #[test]
    fn flags() {
        assert!(UnitInterval::<f32>::lukasiewicz().is_regular().unwrap());
        assert!(!UnitInterval::<f32>::godel().is_regular().unwrap());
        assert!(UnitInterval::<f32>::godel().is_heyting().unwrap());
        assert!(!UnitInterval::<f32>::lukasiewicz().is_heyting().unwrap());
        assert!(!UnitInterval::<f32>::product().is_regular().unwrap());
    }
}
