use super::OperatorTable;
use crate::error::{Error, Result};
use crate::fuzzy_set::{FuzzySet, Universe};
use crate::lattice::{Elem, FiniteLattice, ResiduatedLattice};

/// Identifiers accepted by [`counterexample`].
pub const COUNTEREXAMPLES: [&str; 10] =
    ["e4-1-1", "e4-1-2", "e4-2", "e4-3-1", "e4-3-2", "e4-4-1", "e4-4-2", "e4-5", "e4-6", "e4-u9"];

/// An operator together with the threshold it is examined at.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub id: &'static str,
    pub table: OperatorTable<FiniteLattice>,
    pub beta: Elem,
}

/// Labels where `x` is the top element, concatenated: `1_{x,y}` gives `"xy"`.
fn support(l: &FiniteLattice, x: &FuzzySet<Elem>) -> String {
    (0..x.len()).filter(|&i| x.get(i) == l.top()).map(|i| x.universe().label(i)).collect()
}

fn crisp(l: &FiniteLattice, u: &Universe, labels: &str) -> FuzzySet<Elem> {
    FuzzySet::from_fn(u, |i| if labels.contains(u.label(i)) { l.top() } else { l.bottom() })
}

fn is_zero(l: &FiniteLattice, x: &FuzzySet<Elem>) -> bool {
    x.values().iter().all(|&v| v == l.bottom())
}

/// Builds a table on `{0, 1}` from a map between supports.
fn boolean_table(labels: &[&str], f: impl Fn(&str) -> &'static str) -> Result<OperatorTable<FiniteLattice>> {
    let l = FiniteLattice::boolean();
    let u = Universe::new(labels.iter().copied())?;
    OperatorTable::from_fn(l.clone(), &u, |x| Ok(crisp(&l, &u, f(&support(&l, x)))))
}

pub fn counterexample(id: &str) -> Result<Counterexample> {
    let id: &'static str = COUNTEREXAMPLES
        .into_iter()
        .find(|c| c.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownCounterexample(id.to_string()))?;
    let table = match id {
        "e4-1-1" => boolean_table(&["x", "y"], |_| "")?,
        "e4-1-2" => boolean_table(&["x", "y"], |s| if s.is_empty() { "" } else { "xy" })?,
        "e4-2" => {
            let l = FiniteLattice::table1();
            let u = Universe::new(["x", "y"])?;
            OperatorTable::from_fn(l.clone(), &u, |x| {
                let full = x.values().iter().all(|&v| v == l.top());
                Ok(FuzzySet::constant(&u, if full { l.top() } else { l.bottom() }))
            })?
        }
        "e4-3-1" => boolean_table(&["x", "y", "z"], |s| match s {
            "xyz" => "xyz",
            "xy" => "x",
            "yz" => "y",
            "xz" => "z",
            _ => "",
        })?,
        "e4-3-2" => boolean_table(&["x", "y", "z"], |s| match s {
            "xyz" => "xyz",
            "x" => "x",
            "y" => "y",
            "z" => "z",
            _ => "",
        })?,
        "e4-4-1" => boolean_table(&["x", "y"], |s| if s.contains('y') { "y" } else { "" })?,
        "e4-4-2" => boolean_table(&["x", "y"], |s| match s {
            "" => "",
            "x" => "x",
            _ => "xy",
        })?,
        "e4-5" => {
            let l = FiniteLattice::three_chain("b");
            let u = Universe::new(["x", "y"])?;
            OperatorTable::from_fn(l.clone(), &u, |x| {
                Ok(FuzzySet::constant(&u, if is_zero(&l, x) { l.bottom() } else { l.top() }))
            })?
        }
        "e4-6" => boolean_table(&["x", "y", "z"], |s| match s {
            "" => "",
            "x" => "x",
            "y" => "y",
            "z" => "z",
            _ => "xyz",
        })?,
        "e4-u9" => boolean_table(&["x", "y", "z"], |s| match s {
            "" => "",
            "z" => "yz",
            "x" => "xz",
            "y" => "xy",
            _ => "xyz",
        })?,
        _ => unreachable!("id comes from the list"),
    };
    let beta = table.lattice().top();
    Ok(Counterexample { id, table, beta })
}
