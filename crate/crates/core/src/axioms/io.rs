//! JSON form of operator tables.
//!
//! ```json
//! { "lattice": {"kind": "finite_chain", "n": 2},
//!   "universe": ["x", "y"],
//!   "beta": "1",
//!   "table": [ {"input": ["0", "0"], "output": ["0", "0"]}, … ] }
//! ```
//!
//! Every input set must appear exactly once.

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use super::OperatorTable;
use crate::error::{Error, Result};
use crate::fuzzy_set::{FuzzySet, Universe};
use crate::lattice::{AnyLattice, Elem, FiniteLattice, LatticeDescriptor, ValueCodec};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorRow {
    pub input: Vec<Json>,
    pub output: Vec<Json>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    pub lattice: LatticeDescriptor,
    pub universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Json>,
    pub table: Vec<OperatorRow>,
}

impl OperatorFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The table and its threshold; `beta` defaults to the top element.
    pub fn build(&self) -> Result<(OperatorTable<FiniteLattice>, Elem)> {
        let AnyLattice::Finite(l) = self.lattice.build(None)? else {
            return Err(Error::Undecidable("operator tables need a finite carrier"));
        };
        let u = Universe::new(self.universe.iter().cloned())?;
        let beta = match &self.beta {
            Some(b) => l.parse_value(b)?,
            None => crate::lattice::ResiduatedLattice::top(&l),
        };
        let set = |vals: &[Json]| -> Result<FuzzySet<Elem>> {
            FuzzySet::new(&u, vals.iter().map(|v| l.parse_value(v)).collect::<Result<Vec<_>>>()?)
        };
        let domain = OperatorTable::domain_of(&l, &u)?;
        let mut images: Vec<Option<FuzzySet<Elem>>> = vec![None; domain.len()];
        let probe = OperatorTable::from_images(l.clone(), &u, domain.clone())?;
        for row in &self.table {
            let x = set(&row.input)?;
            let i = probe.index_of(&x);
            if images[i].is_some() {
                return Err(Error::Parse(format!("input {:?} listed twice", row.input)));
            }
            images[i] = Some(set(&row.output)?);
        }
        let images = images
            .into_iter()
            .zip(&domain)
            .map(|(im, x)| {
                im.ok_or_else(|| {
                    let names: Vec<&str> = x.values().iter().map(|&v| l.name_of(v)).collect();
                    Error::Parse(format!("no row for input {names:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((OperatorTable::from_images(l, &u, images)?, beta))
    }

    pub fn from_table(g: &OperatorTable<FiniteLattice>, beta: Option<Elem>) -> Self {
        let l = g.lattice();
        let enc = |s: &FuzzySet<Elem>| s.values().iter().map(|&v| l.encode_value(v, 0)).collect();
        OperatorFile {
            lattice: LatticeDescriptor::of_finite(l),
            universe: g.universe().labels().to_vec(),
            beta: beta.map(|b| l.encode_value(b, 0)),
            table: g.domain().iter().zip(g.images()).map(|(x, y)| OperatorRow { input: enc(x), output: enc(y) }).collect(),
        }
    }
}
