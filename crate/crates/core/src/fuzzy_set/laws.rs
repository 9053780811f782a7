//! Properties of `S^β` and `N^β` as executable checks.
//!
//! With `β = 1` the checks cover the plain functionals `S` and `N`.

use super::{intersection_of, is_subset, subsethood_of, FuzzySet};
use crate::lattice::ResiduatedLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetLaw {
    /// `S^β(A, B) = 1 ⟺ A ≤_β B`; for `β = 1` also `⟺ A ≤ B`.
    S1,
    /// `S^β(A, B ∧ C) = S^β(A, B) ∧ S^β(A, C)`, and `S^β(A, 1_U) = 1`.
    S2,
    /// `S^β(A, α → B) = α → S^β(A, B)`.
    S3,
    /// `S^β(A, α ⊗ B) ≥ α ⊗ S^β(A, B)`.
    S4,
    /// `N^β(A, B) = N^β(B, A)`.
    N1,
    /// `N^β(A, B ∨ C) = N^β(A, B) ∨ N^β(A, C)`, and `N^β(A, 0_U) = 0`.
    N2,
    /// `N^β(A, α ⊗ B) = α ⊗ N^β(A, B)`.
    N3,
    /// `N^β(A, α → B) ≤ α → N^β(A, B)`.
    N4,
    /// `N^β(A, B) → α = S^β(A, B → α)`.
    NS,
    /// `A ≤ B ⟹ S^β(A, C) ≥ S^β(B, C)` and `N^β(A, C) ≤ N^β(B, C)`.
    Antitone,
    /// `S^β(A ∨ B, C) = S^β(A, C) ∧ S^β(B, C)` and `N^β(A ∨ B, C) = N^β(A, C) ∨ N^β(B, C)`.
    Decomposition,
    /// `S^β(A, B) = 1 ⟹ A ≤_β B`.
    SM1,
    /// `A ≤ B ≤ C ⟹ S^β(C, A) ≤ S^β(B, A)`.
    SM3i,
    /// `A ≤ B ⟹ S^β(C, A) ≤ S^β(C, B)`.
    SM3ii,
}

impl SetLaw {
    pub const ALL: [SetLaw; 14] = [
        SetLaw::S1,
        SetLaw::S2,
        SetLaw::S3,
        SetLaw::S4,
        SetLaw::N1,
        SetLaw::N2,
        SetLaw::N3,
        SetLaw::N4,
        SetLaw::NS,
        SetLaw::Antitone,
        SetLaw::Decomposition,
        SetLaw::SM1,
        SetLaw::SM3i,
        SetLaw::SM3ii,
    ];
}

#[derive(Clone, Debug, PartialEq)]
pub struct SetLawViolation<V> {
    pub law: SetLaw,
    pub sets: Vec<FuzzySet<V>>,
    pub scalars: Vec<V>,
}

struct Ctx<'a, L: ResiduatedLattice> {
    l: &'a L,
    beta: L::Value,
}

impl<L: ResiduatedLattice> Ctx<'_, L> {
    fn s(&self, a: &FuzzySet<L::Value>, b: &FuzzySet<L::Value>) -> L::Value {
        self.l.implication(self.beta, subsethood_of(self.l, a.values(), b.values()))
    }

    fn n(&self, a: &FuzzySet<L::Value>, b: &FuzzySet<L::Value>) -> L::Value {
        self.l.tnorm(intersection_of(self.l, a.values(), b.values()), self.beta)
    }

    fn zip(&self, a: &FuzzySet<L::Value>, b: &FuzzySet<L::Value>, f: impl Fn(L::Value, L::Value) -> L::Value) -> FuzzySet<L::Value> {
        a.zip_with(b, f).expect("common universe")
    }
}

/// First violation of `law` over `sets` and `scalars` at threshold `beta`.
///
/// Binary and ternary laws range over all pairs and triples of `sets`.
pub fn check_set_law<L: ResiduatedLattice>(
    l: &L,
    law: SetLaw,
    beta: L::Value,
    sets: &[FuzzySet<L::Value>],
    scalars: &[L::Value],
) -> Option<SetLawViolation<L::Value>> {
    let c = Ctx { l, beta };
    let top = l.top();
    let fail = |s: Vec<&FuzzySet<L::Value>>, k: Vec<L::Value>| {
        Some(SetLawViolation { law, sets: s.into_iter().cloned().collect(), scalars: k })
    };
    match law {
        SetLaw::S1 | SetLaw::SM1 | SetLaw::N1 => {
            for a in sets {
                for b in sets {
                    let s = c.s(a, b);
                    let le_beta = l.le(beta, subsethood_of(l, a.values(), b.values()));
                    let ok = match law {
                        SetLaw::S1 => {
                            l.equiv(s, top) == le_beta && (!l.equiv(beta, top) || l.equiv(s, top) == is_subset(l, a, b))
                        }
                        SetLaw::SM1 => !l.equiv(s, top) || le_beta,
                        _ => l.equiv(c.n(a, b), c.n(b, a)),
                    };
                    if !ok {
                        return fail(vec![a, b], vec![]);
                    }
                }
            }
        }
        SetLaw::S2 | SetLaw::N2 | SetLaw::Antitone | SetLaw::Decomposition | SetLaw::SM3i | SetLaw::SM3ii => {
            for a in sets {
                if law == SetLaw::S2 && !l.equiv(c.s(a, &FuzzySet::constant(a.universe(), top)), top) {
                    return fail(vec![a], vec![]);
                }
                if law == SetLaw::N2 && !l.equiv(c.n(a, &FuzzySet::constant(a.universe(), l.bottom())), l.bottom()) {
                    return fail(vec![a], vec![]);
                }
                for b in sets {
                    for d in sets {
                        let ok = match law {
                            SetLaw::S2 => {
                                let m = c.zip(b, d, |p, q| l.meet(p, q));
                                l.equiv(c.s(a, &m), l.meet(c.s(a, b), c.s(a, d)))
                            }
                            SetLaw::N2 => {
                                let j = c.zip(b, d, |p, q| l.join(p, q));
                                l.equiv(c.n(a, &j), l.join(c.n(a, b), c.n(a, d)))
                            }
                            SetLaw::Antitone => {
                                !is_subset(l, a, b) || (l.le(c.s(b, d), c.s(a, d)) && l.le(c.n(a, d), c.n(b, d)))
                            }
                            SetLaw::Decomposition => {
                                let j = c.zip(a, b, |p, q| l.join(p, q));
                                l.equiv(c.s(&j, d), l.meet(c.s(a, d), c.s(b, d)))
                                    && l.equiv(c.n(&j, d), l.join(c.n(a, d), c.n(b, d)))
                            }
                            SetLaw::SM3i => {
                                !(is_subset(l, a, b) && is_subset(l, b, d)) || l.le(c.s(d, a), c.s(b, a))
                            }
                            _ => !is_subset(l, a, b) || l.le(c.s(d, a), c.s(d, b)),
                        };
                        if !ok {
                            return fail(vec![a, b, d], vec![]);
                        }
                    }
                }
            }
        }
        SetLaw::S3 | SetLaw::S4 | SetLaw::N3 | SetLaw::N4 | SetLaw::NS => {
            for a in sets {
                for b in sets {
                    for &al in scalars {
                        let ok = match law {
                            SetLaw::S3 => {
                                l.equiv(c.s(a, &b.map(|v| l.implication(al, v))), l.implication(al, c.s(a, b)))
                            }
                            SetLaw::S4 => l.le(l.tnorm(al, c.s(a, b)), c.s(a, &b.map(|v| l.tnorm(al, v)))),
                            SetLaw::N3 => l.equiv(c.n(a, &b.map(|v| l.tnorm(al, v))), l.tnorm(al, c.n(a, b))),
                            SetLaw::N4 => l.le(c.n(a, &b.map(|v| l.implication(al, v))), l.implication(al, c.n(a, b))),
                            _ => l.equiv(l.implication(c.n(a, b), al), c.s(a, &b.map(|v| l.implication(v, al)))),
                        };
                        if !ok {
                            return fail(vec![a, b], vec![al]);
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn check_set_laws<L: ResiduatedLattice>(
    l: &L,
    beta: L::Value,
    sets: &[FuzzySet<L::Value>],
    scalars: &[L::Value],
) -> Vec<SetLawViolation<L::Value>> {
    SetLaw::ALL.iter().filter_map(|&law| check_set_law(l, law, beta, sets, scalars)).collect()
}

/// Whether `S^β(A, B) = 0 ⟺ A = 1_U ∧ B = 0_U` holds over `sets`.
///
/// This property is not expected of `S^β`; it is reported, not asserted.
pub fn sm2_holds<L: ResiduatedLattice>(l: &L, beta: L::Value, sets: &[FuzzySet<L::Value>]) -> bool {
    let c = Ctx { l, beta };
    sets.iter().all(|a| {
        sets.iter().all(|b| {
            let zero = l.equiv(c.s(a, b), l.bottom());
            let extreme = a.values().iter().all(|&v| l.equiv(v, l.top()))
                && b.values().iter().all(|&v| l.equiv(v, l.bottom()));
            zero == extreme
        })
    })
}
