use crate::error::{Error, Result};
use crate::fuzzy_set::{check_beta, subsethood_of};
use crate::lattice::ResiduatedLattice;
use crate::lmatrix::LatticeMatrix;

/// Upper bound on `|L|^|X| · |L|^|Y|` for the exhaustive Galois check.
pub const GALOIS_LIMIT: usize = 1 << 20;

/// The four maps a relation `R ⊆ X × Y` and a threshold induce.
///
/// `A` ranges over `L^X` (length `R.rows()`), `B` over `L^Y` (length `R.cols()`).
#[derive(Clone, Debug)]
pub struct GaloisMaps<'a, L: ResiduatedLattice> {
    lattice: &'a L,
    r: &'a LatticeMatrix<L::Value>,
    beta: L::Value,
}

pub fn galois_maps<'a, L: ResiduatedLattice>(
    lattice: &'a L,
    r: &'a LatticeMatrix<L::Value>,
    beta: L::Value,
) -> Result<GaloisMaps<'a, L>> {
    check_beta(lattice, beta)?;
    Ok(GaloisMaps { lattice, r, beta })
}

impl<L: ResiduatedLattice> GaloisMaps<'_, L> {
    fn check_len(&self, got: usize, expected: usize) -> Result<()> {
        if got == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected, found: got })
        }
    }

    /// `↑A(y) = N(A, R(−, y)) ⊗ β`.
    pub fn up(&self, a: &[L::Value]) -> Result<Vec<L::Value>> {
        self.check_len(a.len(), self.r.rows())?;
        let l = self.lattice;
        Ok((0..self.r.cols())
            .map(|y| {
                let n = l.join_all((0..self.r.rows()).map(|x| l.tnorm(a[x], self.r.get(x, y))));
                l.tnorm(n, self.beta)
            })
            .collect())
    }

    /// `↓B(x) = β → S(R(x, −), B)`.
    pub fn down(&self, b: &[L::Value]) -> Result<Vec<L::Value>> {
        self.check_len(b.len(), self.r.cols())?;
        let l = self.lattice;
        Ok((0..self.r.rows()).map(|x| l.implication(self.beta, subsethood_of(l, self.r.row(x), b))).collect())
    }

    /// `⇑A(y) = β → S(R(−, y), A)`.
    pub fn up_double(&self, a: &[L::Value]) -> Result<Vec<L::Value>> {
        self.check_len(a.len(), self.r.rows())?;
        let l = self.lattice;
        Ok((0..self.r.cols()).map(|y| l.implication(self.beta, subsethood_of(l, &self.r.col(y), a))).collect())
    }

    /// `⇓B(x) = N(B, R(x, −)) ⊗ β`.
    pub fn down_double(&self, b: &[L::Value]) -> Result<Vec<L::Value>> {
        self.check_len(b.len(), self.r.cols())?;
        let l = self.lattice;
        Ok((0..self.r.rows())
            .map(|x| {
                let n = l.join_all((0..self.r.cols()).map(|y| l.tnorm(b[y], self.r.get(x, y))));
                l.tnorm(n, self.beta)
            })
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaloisVerdict<V> {
    pub holds: bool,
    /// `(A, B)` with `S(A, down B) ≠ S(up A, B)`.
    pub witness: Option<(Vec<V>, Vec<V>)>,
}

fn vectors<L: ResiduatedLattice>(carrier: &[L::Value], n: usize) -> Vec<Vec<L::Value>> {
    let k = carrier.len();
    (0..k.pow(n as u32))
        .map(|mut code| {
            let mut v = vec![carrier[0]; n];
            for slot in v.iter_mut().rev() {
                *slot = carrier[code % k];
                code /= k;
            }
            v
        })
        .collect()
}

/// Checks `S(A, down B) = S(up A, B)` for every `A ∈ L^m`, `B ∈ L^n`.
pub fn check_galois_pair<L: ResiduatedLattice>(
    l: &L,
    m: usize,
    n: usize,
    up: impl Fn(&[L::Value]) -> Vec<L::Value>,
    down: impl Fn(&[L::Value]) -> Vec<L::Value>,
) -> Result<GaloisVerdict<L::Value>> {
    let carrier = l.carrier().ok_or(Error::Undecidable("the Galois check needs a finite carrier"))?;
    let k = carrier.len() as u128;
    if k.pow((m + n) as u32) > GALOIS_LIMIT as u128 {
        return Err(Error::TableTooLarge { universe: m.max(n), carrier: carrier.len() });
    }
    let (as_, bs) = (vectors::<L>(&carrier, m), vectors::<L>(&carrier, n));
    let ups: Vec<_> = as_.iter().map(|a| up(a)).collect();
    let downs: Vec<_> = bs.iter().map(|b| down(b)).collect();
    for (a, ua) in as_.iter().zip(&ups) {
        for (b, db) in bs.iter().zip(&downs) {
            if !l.equiv(subsethood_of(l, a, db), subsethood_of(l, ua, b)) {
                return Ok(GaloisVerdict { holds: false, witness: Some((a.clone(), b.clone())) });
            }
        }
    }
    Ok(GaloisVerdict { holds: true, witness: None })
}

/// Both Galois connections of `R`: `(↑, ↓)` on `L^X × L^Y` and `(⇓, ⇑)` on
/// `L^Y × L^X`. The witness is from the first pair that fails.
pub fn check_galois<L: ResiduatedLattice>(
    l: &L,
    r: &LatticeMatrix<L::Value>,
    beta: L::Value,
) -> Result<GaloisVerdict<L::Value>> {
    let g = galois_maps(l, r, beta)?;
    let (m, n) = r.shape();
    let first = check_galois_pair(l, m, n, |a| g.up(a).expect("length"), |b| g.down(b).expect("length"))?;
    if !first.holds {
        return Ok(first);
    }
    check_galois_pair(l, n, m, |b| g.down_double(b).expect("length"), |a| g.up_double(a).expect("length"))
}
