use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::ResiduatedLattice;
use crate::error::{Error, Result};

/// An element of a [`FiniteLattice`], as an index into its carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub u16);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, PartialEq)]
struct Tables {
    names: Vec<String>,
    numeric: Option<Vec<f64>>,
    n: usize,
    leq: Vec<bool>,
    meet: Vec<u16>,
    join: Vec<u16>,
    tnorm: Vec<u16>,
    imp: Vec<u16>,
    regular: bool,
    heyting: bool,
}

/// A residuated lattice on a finite carrier, stored as full operation tables.
///
/// Every constructor checks the lattice, monoid and adjointness laws
/// exhaustively, so a value of this type is always lawful. Element `0` of the
/// carrier is the bottom and the last element is the top.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteLattice {
    tables: Arc<Tables>,
    label: String,
}

const MAX_CARRIER: usize = 1024;

impl FiniteLattice {
    /// Builds the lattice from its order and its t-norm; the residuum is derived.
    ///
    /// `leq[a][b]` says whether `a ≤ b`; `tnorm[a][b]` is the index of `a ⊗ b`.
    pub fn from_order_and_tnorm(
        names: Vec<String>,
        leq: &[Vec<bool>],
        tnorm: &[Vec<usize>],
    ) -> Result<Self> {
        let n = names.len();
        check_names(&names)?;
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::BadCarrier(format!("order table must be {n}x{n}")));
        }
        let le = |a: usize, b: usize| leq[a][b];
        for a in 0..n {
            if !le(a, a) {
                return Err(Error::BadCarrier(format!("order is not reflexive at {}", names[a])));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(Error::BadCarrier(format!(
                        "order is not antisymmetric on {} and {}",
                        names[a], names[b]
                    )));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(Error::BadCarrier(format!(
                            "order is not transitive on {}, {}, {}",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        if (0..n).any(|a| !le(0, a)) {
            return Err(Error::BadCarrier(format!("first element {} is not the bottom", names[0])));
        }
        if (0..n).any(|a| !le(a, n - 1)) {
            return Err(Error::BadCarrier(format!("last element {} is not the top", names[n - 1])));
        }

        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
                let glb = lower.iter().copied().find(|&c| lower.iter().all(|&d| le(d, c)));
                let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
                let lub = upper.iter().copied().find(|&c| upper.iter().all(|&d| le(c, d)));
                match (glb, lub) {
                    (Some(g), Some(l)) => {
                        meet[a * n + b] = g as u16;
                        join[a * n + b] = l as u16;
                    }
                    _ => {
                        return Err(Error::BadCarrier(format!(
                            "{} and {} have no meet or no join",
                            names[a], names[b]
                        )))
                    }
                }
            }
        }

        if tnorm.len() != n || tnorm.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::TableNotResiduated(format!("t-norm table must be {n}x{n} over the carrier")));
        }
        let t = |a: usize, b: usize| tnorm[a][b];
        let j = |a: usize, b: usize| join[a * n + b] as usize;
        let top = n - 1;
        for a in 0..n {
            if t(a, top) != a {
                return Err(Error::TableNotResiduated(format!("{} ⊗ 1 ≠ {}", names[a], names[a])));
            }
            if t(a, 0) != 0 {
                return Err(Error::TableNotResiduated(format!("{} ⊗ 0 ≠ 0", names[a])));
            }
            for b in 0..n {
                if t(a, b) != t(b, a) {
                    return Err(Error::TableNotResiduated(format!(
                        "⊗ is not commutative on {} and {}",
                        names[a], names[b]
                    )));
                }
                for c in 0..n {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return Err(Error::TableNotResiduated(format!(
                            "⊗ is not associative on {}, {}, {}",
                            names[a], names[b], names[c]
                        )));
                    }
                    if t(a, j(b, c)) != j(t(a, b), t(a, c)) {
                        return Err(Error::TableNotResiduated(format!(
                            "⊗ does not distribute over the join of {} and {}",
                            names[b], names[c]
                        )));
                    }
                }
            }
        }

        // On a finite carrier, distributivity over binary joins and a ⊗ 0 = 0
        // make the join of all c with a ⊗ c ≤ b the residuum.
        let mut imp = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let r = (0..n).filter(|&c| le(t(a, c), b)).fold(0, &j);
                if !le(t(a, r), b) {
                    return Err(Error::TableNotResiduated(format!(
                        "no largest c with {} ⊗ c ≤ {}",
                        names[a], names[b]
                    )));
                }
                imp[a * n + b] = r as u16;
            }
        }

        let flat_leq: Vec<bool> = leq.iter().flatten().copied().collect();
        let flat_t: Vec<u16> = tnorm.iter().flatten().map(|&v| v as u16).collect();
        let heyting = flat_t == meet;
        let regular = (0..n).all(|a| {
            let na = imp[a * n] as usize;
            imp[na * n] as usize == a
        });
        Ok(FiniteLattice {
            tables: Arc::new(Tables {
                names,
                numeric: None,
                n,
                leq: flat_leq,
                meet,
                join,
                tnorm: flat_t,
                imp,
                regular,
                heyting,
            }),
            label: "table".into(),
        })
    }

    /// Builds the lattice from explicit `⊗` and `→` tables.
    ///
    /// The order is read off the implication (`a ≤ b` iff `a → b = 1`) and the
    /// supplied implication must then coincide with the residuum of `⊗`.
    pub fn from_tables(names: Vec<String>, tnorm: &[Vec<usize>], imp: &[Vec<usize>]) -> Result<Self> {
        let n = names.len();
        check_names(&names)?;
        if imp.len() != n || imp.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::TableNotResiduated(format!(
                "implication table must be {n}x{n} over the carrier"
            )));
        }
        let leq: Vec<Vec<bool>> = imp.iter().map(|r| r.iter().map(|&v| v == n - 1).collect()).collect();
        let lat = Self::from_order_and_tnorm(names, &leq, tnorm)?;
        for a in 0..n {
            for b in 0..n {
                let derived = lat.tables.imp[a * n + b] as usize;
                if derived != imp[a][b] {
                    let nm = &lat.tables.names;
                    return Err(Error::TableNotResiduated(format!(
                        "{} → {} is {} but the residuum of ⊗ gives {}",
                        nm[a], nm[b], nm[imp[a][b]], nm[derived]
                    )));
                }
            }
        }
        Ok(lat)
    }

    /// The chain `0 < 1/(n-1) < … < 1` with the minimum t-norm.
    pub fn chain_godel(n: usize) -> Result<Self> {
        Self::chain(n, |a, b, _| a.min(b), "godel")
    }

    /// The chain `0 < 1/(n-1) < … < 1` with the truncated-sum t-norm.
    pub fn chain_lukasiewicz(n: usize) -> Result<Self> {
        Self::chain(n, |a, b, top| (a + b).saturating_sub(top), "lukasiewicz")
    }

    fn chain(n: usize, t: impl Fn(usize, usize, usize) -> usize, tag: &str) -> Result<Self> {
        if !(2..=MAX_CARRIER).contains(&n) {
            return Err(Error::BadCarrier(format!("chain length {n} outside 2..={MAX_CARRIER}")));
        }
        let top = n - 1;
        let names = (0..n).map(|i| Ratio::new(i as i64, top as i64).to_string()).collect();
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        let tn: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| t(a, b, top)).collect()).collect();
        let mut lat = Self::from_order_and_tnorm(names, &leq, &tn)?;
        let tables = Arc::get_mut(&mut lat.tables).expect("fresh");
        tables.numeric = Some((0..n).map(|i| i as f64 / top as f64).collect());
        lat.label = format!("chain{n}-{tag}");
        Ok(lat)
    }

    /// The two-element Boolean algebra `{0, 1}`.
    pub fn boolean() -> Self {
        let mut lat = Self::chain_godel(2).expect("two-element chain");
        lat.label = "boolean".into();
        lat
    }

    /// The three-element Heyting chain `0 < a < 1` with `⊗ = ∧`.
    pub fn table1() -> Self {
        Self::three_chain("a")
    }

    /// The same structure as [`table1`](Self::table1) with the middle element named freely.
    pub fn three_chain(middle: &str) -> Self {
        let names = vec!["0".to_string(), middle.to_string(), "1".to_string()];
        let leq: Vec<Vec<bool>> = (0..3).map(|a| (0..3).map(|b| a <= b).collect()).collect();
        let tn: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| a.min(b)).collect()).collect();
        let mut lat = Self::from_order_and_tnorm(names, &leq, &tn).expect("three-element chain");
        lat.label = "table1".into();
        lat
    }

    /// The four-element Boolean algebra `{0, a, b, 1}` with `⊗ = ∧`.
    pub fn diamond() -> Self {
        let leq = diamond_order();
        let meet = |a: usize, b: usize| if a == b || b == 3 { a } else if a == 3 { b } else { 0 };
        let tn: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| meet(a, b)).collect()).collect();
        let names: Vec<String> = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
        let mut lat = Self::from_order_and_tnorm(names, &leq, &tn).expect("diamond");
        lat.label = "diamond".into();
        lat
    }

    /// Every residuated lattice with between two and `max_size` elements, up to
    /// isomorphism of the underlying order. Only carriers of at most four
    /// elements are enumerated; larger requests are truncated to four.
    pub fn all_up_to(max_size: usize) -> Vec<Self> {
        let mut orders: Vec<(String, Vec<Vec<bool>>)> = Vec::new();
        for n in 2..=max_size.min(4) {
            orders.push((format!("chain{n}"), (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect()));
            if n == 4 {
                orders.push(("diamond".into(), diamond_order()));
            }
        }
        let mut out = Vec::new();
        for (tag, leq) in orders {
            let n = leq.len();
            let names: Vec<String> = if tag == "diamond" {
                ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect()
            } else {
                (0..n).map(|i| Ratio::new(i as i64, (n - 1) as i64).to_string()).collect()
            };
            let interior: Vec<(usize, usize)> =
                (1..n - 1).flat_map(|a| (a..n - 1).map(move |b| (a, b))).collect();
            let combos = n.pow(interior.len() as u32);
            let mut k = 0;
            for code in 0..combos {
                let mut tn = vec![vec![0usize; n]; n];
                for (a, row) in tn.iter_mut().enumerate() {
                    row[n - 1] = a;
                }
                tn[n - 1] = (0..n).collect();
                let mut c = code;
                for &(a, b) in &interior {
                    tn[a][b] = c % n;
                    tn[b][a] = c % n;
                    c /= n;
                }
                if let Ok(mut lat) = Self::from_order_and_tnorm(names.clone(), &leq, &tn) {
                    if tag != "diamond" {
                        Arc::get_mut(&mut lat.tables).expect("fresh").numeric =
                            Some((0..n).map(|i| i as f64 / (n - 1) as f64).collect());
                    }
                    lat.label = format!("{tag}#{k}");
                    k += 1;
                    out.push(lat);
                }
            }
        }
        out
    }

    /// Renames the structure, for reporting.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn size(&self) -> usize {
        self.tables.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.tables.n as u16).map(Elem)
    }

    pub fn names(&self) -> &[String] {
        &self.tables.names
    }

    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.tables.names.iter().position(|n| n == name).map(|i| Elem(i as u16))
    }

    pub fn name_of(&self, a: Elem) -> &str {
        &self.tables.names[a.index()]
    }

    /// Numeric reading of an element when the carrier is a chain of fractions.
    pub fn numeric(&self, a: Elem) -> Option<f64> {
        self.tables.numeric.as_ref().map(|v| v[a.index()])
    }

    /// Element whose numeric reading equals `x` within `tol`.
    pub fn elem_from_f64(&self, x: f64, tol: f64) -> Option<Elem> {
        let nums = self.tables.numeric.as_ref()?;
        nums.iter().position(|&v| (v - x).abs() <= tol).map(|i| Elem(i as u16))
    }

    /// The implication table as carrier indices.
    pub fn implication_table(&self) -> Vec<Vec<usize>> {
        self.square(&self.tables.imp)
    }

    pub fn tnorm_table(&self) -> Vec<Vec<usize>> {
        self.square(&self.tables.tnorm)
    }

    fn square(&self, t: &[u16]) -> Vec<Vec<usize>> {
        let n = self.tables.n;
        (0..n).map(|a| (0..n).map(|b| t[a * n + b] as usize).collect()).collect()
    }

    #[inline]
    fn at(&self, t: &[u16], a: Elem, b: Elem) -> Elem {
        Elem(t[a.index() * self.tables.n + b.index()])
    }
}

fn check_names(names: &[String]) -> Result<()> {
    if names.len() < 2 {
        return Err(Error::BadCarrier("a carrier needs at least 0 and 1".into()));
    }
    if names.len() > MAX_CARRIER {
        return Err(Error::BadCarrier(format!("carrier larger than {MAX_CARRIER}")));
    }
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(Error::BadCarrier("empty element name".into()));
        }
        if names[..i].contains(n) {
            return Err(Error::BadCarrier(format!("duplicate element name {n}")));
        }
    }
    Ok(())
}

fn diamond_order() -> Vec<Vec<bool>> {
    (0..4)
        .map(|a| (0..4).map(|b| a == b || a == 0 || b == 3).collect())
        .collect()
}

impl ResiduatedLattice for FiniteLattice {
    type Value = Elem;

    fn bottom(&self) -> Elem {
        Elem(0)
    }

    fn top(&self) -> Elem {
        Elem((self.tables.n - 1) as u16)
    }

    fn le(&self, a: Elem, b: Elem) -> bool {
        self.tables.leq[a.index() * self.tables.n + b.index()]
    }

    fn equiv(&self, a: Elem, b: Elem) -> bool {
        a == b
    }

    fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.at(&self.tables.meet, a, b)
    }

    fn join(&self, a: Elem, b: Elem) -> Elem {
        self.at(&self.tables.join, a, b)
    }

    fn tnorm(&self, a: Elem, b: Elem) -> Elem {
        self.at(&self.tables.tnorm, a, b)
    }

    fn implication(&self, a: Elem, b: Elem) -> Elem {
        self.at(&self.tables.imp, a, b)
    }

    fn contains(&self, a: Elem) -> bool {
        a.index() < self.tables.n
    }

    fn carrier(&self) -> Option<Vec<Elem>> {
        Some(self.elements().collect())
    }

    fn is_regular(&self) -> Result<bool> {
        Ok(self.tables.regular)
    }

    fn is_heyting(&self) -> Result<bool> {
        Ok(self.tables.heyting)
    }

    fn name(&self) -> String {
        self.label.clone()
    }

    fn format_value(&self, a: Elem, _decimals: usize) -> String {
        self.name_of(a).to_string()
    }

    fn to_f64(&self, a: Elem) -> Option<f64> {
        self.numeric(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn table1_matches_its_tables() {
        let l = FiniteLattice::table1();
        let a = l.elem("a").unwrap();
        assert_eq!(l.implication(l.top(), a), a);
        assert_eq!(l.implication(a, l.bottom()), l.bottom());
        assert_eq!(l.negation(a), l.bottom());
        assert!(l.is_heyting().unwrap());
        assert!(!l.is_regular().unwrap());
        assert_eq!(
            l.implication_table(),
            vec![vec![2, 2, 2], vec![0, 2, 2], vec![0, 1, 2]]
        );
    }

    #[test]
    fn from_tables_accepts_table1() {
        let tn = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]];
        let im = vec![vec![2, 2, 2], vec![0, 2, 2], vec![0, 1, 2]];
        let l = FiniteLattice::from_tables(s(&["0", "a", "1"]), &tn, &im).unwrap();
        assert_eq!(l.implication(Elem(2), Elem(1)), Elem(1));
    }

    #[test]
    fn from_tables_rejects_wrong_residuum() {
        let tn = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]];
        let im = vec![vec![2, 2, 2], vec![1, 2, 2], vec![0, 1, 2]];
        assert!(matches!(
            FiniteLattice::from_tables(s(&["0", "a", "1"]), &tn, &im),
            Err(Error::TableNotResiduated(_))
        ));
    }

    #[test]
    fn rejects_non_monoid_and_bad_order() {
        let leq: Vec<Vec<bool>> = (0..3).map(|a| (0..3).map(|b| a <= b).collect()).collect();
        let tn = vec![vec![0, 0, 0], vec![0, 2, 1], vec![0, 1, 2]];
        assert!(matches!(
            FiniteLattice::from_order_and_tnorm(s(&["0", "a", "1"]), &leq, &tn),
            Err(Error::TableNotResiduated(_))
        ));
        // Two atoms with no top is not a bounded lattice.
        let leq = vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]];
        let tn = vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]];
        assert!(matches!(
            FiniteLattice::from_order_and_tnorm(s(&["0", "a", "b"]), &leq, &tn),
            Err(Error::BadCarrier(_))
        ));
        assert!(matches!(
            FiniteLattice::from_order_and_tnorm(s(&["0"]), &[vec![true]], &[vec![0]]),
            Err(Error::BadCarrier(_))
        ));
    }

    #[test]
    fn chains() {
        let g = FiniteLattice::chain_godel(5).unwrap();
        assert!(g.is_heyting().unwrap() && !g.is_regular().unwrap());
        assert_eq!(g.name_of(Elem(2)), "1/2");
        let l = FiniteLattice::chain_lukasiewicz(5).unwrap();
        assert!(l.is_regular().unwrap() && !l.is_heyting().unwrap());
        assert_eq!(l.tnorm(Elem(3), Elem(2)), Elem(1));
        assert_eq!(l.numeric(Elem(1)), Some(0.25));
        assert!(FiniteLattice::boolean().is_regular().unwrap());
        assert!(FiniteLattice::diamond().is_regular().unwrap());
    }

    #[test]
    fn small_lattice_census() {
        let all = FiniteLattice::all_up_to(4);
        let count = |p: &str| all.iter().filter(|l| l.name().starts_with(p)).count();
        assert_eq!(count("chain2"), 1);
        // Three-element chain: Gödel and Łukasiewicz.
        assert_eq!(count("chain3"), 2);
        assert!(count("chain4") >= 3);
        assert!(count("diamond") >= 1);
    }
}
