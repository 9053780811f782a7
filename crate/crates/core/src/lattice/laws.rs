//! Executable statements of the standard residuated-lattice identities.
//!
//! Each law is checked over a sample of carrier values: the whole carrier for
//! finite lattices, a grid for the unit interval. Laws quantified over
//! families use every subset of a small sample and otherwise the empty
//! family, singletons, pairs and the whole sample.

use super::ResiduatedLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    /// Commutativity, `a → b = 1 ⟺ a ≤ b`, and `1 → a = a`.
    I1,
    /// `a ⊗ (a → b) ≤ b`.
    I2,
    /// `a → (b → c) = (a ⊗ b) → c = b → (a → c)`.
    I3,
    /// `⊗` distributes over joins.
    I4,
    /// `(⋁ aₜ) → b = ⋀ (aₜ → b)`.
    I5,
    /// `a → ⋀ bₜ = ⋀ (a → bₜ)`.
    I6,
    /// Adjointness.
    I7,
    /// `b ≤ a → (a ⊗ b)`.
    I8,
    /// Contraposition `a → b = ¬b → ¬a`.
    I9,
    /// `a → b = ¬(a ⊗ ¬b)`.
    I10,
    /// `¬ ⋀ aₜ = ⋁ ¬aₜ`.
    I11,
    /// `a = ⋀_b ((a → b) → b)`, valid in every complete residuated lattice.
    WeakDoubleNegation,
}

impl Law {
    /// Laws valid in every complete residuated lattice.
    pub const GENERAL: [Law; 9] = [
        Law::I1,
        Law::I2,
        Law::I3,
        Law::I4,
        Law::I5,
        Law::I6,
        Law::I7,
        Law::I8,
        Law::WeakDoubleNegation,
    ];
    /// Laws that characterize regular lattices.
    pub const REGULAR: [Law; 3] = [Law::I9, Law::I10, Law::I11];
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawViolation<V> {
    pub law: Law,
    pub args: Vec<V>,
}

fn families<V: Copy>(sample: &[V]) -> Vec<Vec<V>> {
    if sample.len() <= 8 {
        (0u32..1 << sample.len())
            .map(|mask| (0..sample.len()).filter(|i| mask >> i & 1 == 1).map(|i| sample[i]).collect())
            .collect()
    } else {
        let mut out = vec![Vec::new(), sample.to_vec()];
        for (i, &a) in sample.iter().enumerate() {
            out.push(vec![a]);
            for &b in &sample[i + 1..] {
                out.push(vec![a, b]);
            }
        }
        out
    }
}

/// First violation of `law` over `sample`, if any.
pub fn check_law<L: ResiduatedLattice>(l: &L, law: Law, sample: &[L::Value]) -> Option<LawViolation<L::Value>> {
    let fail = |args: Vec<L::Value>| Some(LawViolation { law, args });
    let top = l.top();
    match law {
        Law::I1 | Law::I2 | Law::I8 | Law::I9 | Law::I10 => {
            for &a in sample {
                for &b in sample {
                    let ok = match law {
                        Law::I1 => {
                            l.equiv(l.tnorm(a, b), l.tnorm(b, a))
                                && (l.equiv(l.implication(a, b), top) == l.le(a, b))
                                && l.equiv(l.implication(top, a), a)
                        }
                        Law::I2 => l.le(l.tnorm(a, l.implication(a, b)), b),
                        Law::I8 => l.le(b, l.implication(a, l.tnorm(a, b))),
                        Law::I9 => l.equiv(l.implication(a, b), l.implication(l.negation(b), l.negation(a))),
                        _ => l.equiv(l.implication(a, b), l.negation(l.tnorm(a, l.negation(b)))),
                    };
                    if !ok {
                        return fail(vec![a, b]);
                    }
                }
            }
        }
        Law::I3 | Law::I7 => {
            for &a in sample {
                for &b in sample {
                    for &c in sample {
                        let ok = if law == Law::I3 {
                            let x = l.implication(a, l.implication(b, c));
                            l.equiv(x, l.implication(l.tnorm(a, b), c)) && l.equiv(x, l.implication(b, l.implication(a, c)))
                        } else {
                            l.le(l.tnorm(a, b), c) == l.le(a, l.implication(b, c))
                        };
                        if !ok {
                            return fail(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        Law::I4 | Law::I5 | Law::I6 => {
            for fam in families(sample) {
                for &a in sample {
                    let ok = match law {
                        Law::I4 => l.equiv(
                            l.tnorm(a, l.join_all(fam.iter().copied())),
                            l.join_all(fam.iter().map(|&b| l.tnorm(a, b))),
                        ),
                        Law::I5 => l.equiv(
                            l.implication(l.join_all(fam.iter().copied()), a),
                            l.meet_all(fam.iter().map(|&b| l.implication(b, a))),
                        ),
                        _ => l.equiv(
                            l.implication(a, l.meet_all(fam.iter().copied())),
                            l.meet_all(fam.iter().map(|&b| l.implication(a, b))),
                        ),
                    };
                    if !ok {
                        let mut args = vec![a];
                        args.extend(fam);
                        return fail(args);
                    }
                }
            }
        }
        Law::I11 => {
            for fam in families(sample) {
                let lhs = l.negation(l.meet_all(fam.iter().copied()));
                let rhs = l.join_all(fam.iter().map(|&a| l.negation(a)));
                if !l.equiv(lhs, rhs) {
                    return fail(fam);
                }
            }
        }
        Law::WeakDoubleNegation => {
            for &a in sample {
                let v = l.meet_all(sample.iter().map(|&b| l.implication(l.implication(a, b), b)));
                if !l.equiv(v, a) {
                    return fail(vec![a]);
                }
            }
        }
    }
    None
}

/// All violations among `laws`, at most one per law.
pub fn check_laws<L: ResiduatedLattice>(l: &L, laws: &[Law], sample: &[L::Value]) -> Vec<LawViolation<L::Value>> {
    laws.iter().filter_map(|&law| check_law(l, law, sample)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{FiniteLattice, UnitInterval};

    #[test]
    fn finite_lattices_obey_the_general_laws() {
        for l in FiniteLattice::all_up_to(4) {
            let c = l.carrier().unwrap();
            assert!(check_laws(&l, &Law::GENERAL, &c).is_empty(), "{}", l.name());
            let regular_ok = check_laws(&l, &Law::REGULAR, &c).is_empty();
            assert_eq!(regular_ok, l.is_regular().unwrap(), "{}", l.name());
        }
    }

    #[test]
    fn godel_fails_contraposition() {
        let g = UnitInterval::<f64>::godel();
        let grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        assert!(check_laws(&g, &Law::GENERAL, &grid).is_empty());
        assert!(check_law(&g, Law::I9, &grid).is_some());
        let l = UnitInterval::<f64>::lukasiewicz();
        assert!(check_laws(&l, &Law::REGULAR, &grid).is_empty());
    }
}
