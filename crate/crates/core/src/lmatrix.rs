//! Matrices of lattice values with the `△` and `▲` compositions.
//!
//! `A △ B` has entries `⋀ₖ aᵢₖ → bₖⱼ` and `A ▲ B` has entries `⋁ₖ aᵢₖ ⊗ bₖⱼ`.
//! Both are instances of one kernel parameterized by the combining and the
//! reducing operation.

use std::fmt;

use crate::approx::{Direction, Pair};
use crate::covering::BetaCovering;
use crate::error::{Error, Result};
use crate::fuzzy_set::FuzzySet;
use crate::lattice::ResiduatedLattice;

/// A dense row-major matrix of lattice values.
#[derive(Clone, PartialEq)]
pub struct LatticeMatrix<V> {
    rows: usize,
    cols: usize,
    data: Vec<V>,
}

impl<V: Copy> LatticeMatrix<V> {
    pub fn new(rows: usize, cols: usize, data: Vec<V>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!("empty {rows}x{cols} matrix")));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(LatticeMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<V>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> V) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        LatticeMatrix { rows, cols, data }
    }

    /// `M_X`: the set as an `n×1` column.
    pub fn column(set: &FuzzySet<V>) -> Self {
        LatticeMatrix { rows: set.len(), cols: 1, data: set.values().to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> V {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[V] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<V> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[V] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<V>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn map(&self, f: impl FnMut(V) -> V) -> Self {
        LatticeMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().copied().map(f).collect() }
    }

    /// Entrywise equality under the lattice's notion of equality.
    pub fn equiv<L: ResiduatedLattice<Value = V>>(&self, l: &L, other: &Self) -> bool {
        self.shape() == other.shape() && self.data.iter().zip(&other.data).all(|(&a, &b)| l.equiv(a, b))
    }
}

impl<V: fmt::Debug> fmt::Debug for LatticeMatrix<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LatticeMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols) {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

fn product<V: Copy>(
    a: &LatticeMatrix<V>,
    b: &LatticeMatrix<V>,
    init: V,
    combine: impl Fn(V, V) -> V,
    reduce: impl Fn(V, V) -> V,
) -> Result<LatticeMatrix<V>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut data = vec![init; a.rows * b.cols];
    for (i, out) in data.chunks_mut(b.cols).enumerate() {
        for (k, &aik) in a.row(i).iter().enumerate() {
            for (acc, &bkj) in out.iter_mut().zip(b.row(k)) {
                *acc = reduce(*acc, combine(aik, bkj));
            }
        }
    }
    Ok(LatticeMatrix { rows: a.rows, cols: b.cols, data })
}

/// `A △ B`.
pub fn tri<L: ResiduatedLattice>(
    l: &L,
    a: &LatticeMatrix<L::Value>,
    b: &LatticeMatrix<L::Value>,
) -> Result<LatticeMatrix<L::Value>> {
    product(a, b, l.top(), |x, y| l.implication(x, y), |x, y| l.meet(x, y))
}

/// `A ▲ B`.
pub fn btri<L: ResiduatedLattice>(
    l: &L,
    a: &LatticeMatrix<L::Value>,
    b: &LatticeMatrix<L::Value>,
) -> Result<LatticeMatrix<L::Value>> {
    product(a, b, l.bottom(), |x, y| l.tnorm(x, y), |x, y| l.join(x, y))
}

/// `α △ B`, entrywise `α → bᵢⱼ`.
pub fn scalar_tri<L: ResiduatedLattice>(l: &L, alpha: L::Value, b: &LatticeMatrix<L::Value>) -> LatticeMatrix<L::Value> {
    b.map(|v| l.implication(alpha, v))
}

/// `α ▲ B`, entrywise `α ⊗ bᵢⱼ`; by commutativity also `B ▲ α`.
pub fn scalar_btri<L: ResiduatedLattice>(l: &L, alpha: L::Value, b: &LatticeMatrix<L::Value>) -> LatticeMatrix<L::Value> {
    b.map(|v| l.tnorm(alpha, v))
}

/// `M_𝒞`: rows indexed by the universe, columns by the members.
pub fn m_covering<L: ResiduatedLattice>(c: &BetaCovering<L>) -> LatticeMatrix<L::Value> {
    let m = c.members();
    LatticeMatrix::from_fn(c.universe().len(), m.len(), |i, j| m[j].get(i))
}

/// `M_𝒞 △ (M_𝒞)ᵀ`.
pub fn relation_matrix<L: ResiduatedLattice>(c: &BetaCovering<L>) -> LatticeMatrix<L::Value> {
    let m = m_covering(c);
    tri(c.lattice(), &m, &m.transpose()).expect("square by construction")
}

/// One of the six operators, evaluated through matrix products only.
pub fn approx_via_matrix<L: ResiduatedLattice>(
    c: &BetaCovering<L>,
    x: &FuzzySet<L::Value>,
    pair: Pair,
    dir: Direction,
) -> Result<FuzzySet<L::Value>> {
    let l = c.lattice();
    c.check_target(x)?;
    let beta = c.beta();
    let m = m_covering(c);
    let mt = m.transpose();
    let mx = LatticeMatrix::column(x);
    let out = match (pair, dir) {
        (Pair::One, Direction::Lower) => btri(l, &m, &scalar_tri(l, beta, &tri(l, &mt, &mx)?))?,
        (Pair::One, Direction::Upper) => tri(l, &m, &scalar_btri(l, beta, &btri(l, &mt, &mx)?))?,
        (Pair::Two, Direction::Lower) => tri(l, &m, &scalar_tri(l, beta, &tri(l, &mt, &mx)?))?,
        (Pair::Two, Direction::Upper) => btri(l, &m, &scalar_btri(l, beta, &btri(l, &mt, &mx)?))?,
        (Pair::Three, dir) => {
            let rt = tri(l, &m, &mt)?.transpose();
            match dir {
                Direction::Lower => scalar_tri(l, beta, &tri(l, &rt, &mx)?),
                Direction::Upper => scalar_btri(l, beta, &btri(l, &rt, &mx)?),
            }
        }
    };
    FuzzySet::new(x.universe(), out.col(0))
}
