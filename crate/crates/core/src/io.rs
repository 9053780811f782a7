//! Covering files.
//!
//! ```json
//! { "lattice": {"kind": "godel"}, "beta": 0.6, "universe": ["x1", "x2"],
//!   "covering": {"C1": [0.7, 0.1], "C2": [0.5, 0.7]},
//!   "targets": {"X": [0.4, 0.3]} }
//! ```
//!
//! Member and target order follows the file. Unit-interval values are JSON
//! numbers (or strings such as `"1/3"`); finite-lattice values are carrier names.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value as Json;

use crate::covering::BetaCovering;
use crate::error::{Error, Result};
use crate::fuzzy_set::{FuzzySet, Universe};
use crate::lattice::{AnyLattice, FiniteLattice, LatticeDescriptor, ValueCodec};
use crate::Unit64;

/// Named vectors in file order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NamedVectors(pub Vec<(String, Vec<Json>)>);

impl Serialize for NamedVectors {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for NamedVectors {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = NamedVectors;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object mapping names to arrays of values")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<NamedVectors, A::Error> {
                let mut out: Vec<(String, Vec<Json>)> = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Vec<Json>>()? {
                    if out.iter().any(|(n, _)| *n == k) {
                        return Err(serde::de::Error::custom(format!("duplicate name `{k}`")));
                    }
                    out.push((k, v));
                }
                Ok(NamedVectors(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringFile {
    pub lattice: LatticeDescriptor,
    pub beta: Json,
    pub universe: Vec<String>,
    pub covering: NamedVectors,
    #[serde(default, skip_serializing_if = "is_empty")]
    pub targets: NamedVectors,
}

fn is_empty(v: &NamedVectors) -> bool {
    v.0.is_empty()
}

/// A covering and the target sets that came with it.
#[derive(Clone, Debug)]
pub struct Loaded<L: ValueCodec> {
    pub covering: BetaCovering<L>,
    pub targets: Vec<(String, FuzzySet<L::Value>)>,
}

impl<L: ValueCodec> Loaded<L> {
    pub fn target(&self, name: &str) -> Result<&FuzzySet<L::Value>> {
        self.targets
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::UnknownTarget(name.to_string()))
    }
}

/// A loaded file, by kind of lattice.
#[derive(Clone, Debug)]
pub enum AnyLoaded {
    Unit(Loaded<Unit64>),
    Finite(Loaded<FiniteLattice>),
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{path}: {m}")),
        Error::ForeignValue(v) => Error::Parse(format!("{path}: value {v} does not belong to the lattice")),
        other => other,
    }
}

impl CoveringFile {
    /// Parses JSON; errors carry the line and column.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(&self, tolerance: Option<f64>) -> Result<AnyLoaded> {
        Ok(match self.lattice.build(tolerance)? {
            AnyLattice::Unit(l) => AnyLoaded::Unit(self.load_with(l)?),
            AnyLattice::Finite(l) => AnyLoaded::Finite(self.load_with(l)?),
        })
    }

    pub fn load_with<L: ValueCodec>(&self, l: L) -> Result<Loaded<L>> {
        let u = Universe::new(self.universe.iter().cloned())?;
        let vector = |section: &str, name: &str, vals: &[Json]| -> Result<FuzzySet<L::Value>> {
            if vals.len() != u.len() {
                return Err(Error::Parse(format!(
                    "{section}.{name}: expected {} values, found {}",
                    u.len(),
                    vals.len()
                )));
            }
            let vs = vals
                .iter()
                .enumerate()
                .map(|(i, v)| l.parse_value(v).map_err(|e| at(&format!("{section}.{name}[{i}]"), e)))
                .collect::<Result<Vec<_>>>()?;
            FuzzySet::new(&u, vs)
        };
        let beta = l.parse_value(&self.beta).map_err(|e| at("beta", e))?;
        let members = self
            .covering
            .0
            .iter()
            .map(|(n, v)| Ok((n.clone(), vector("covering", n, v)?)))
            .collect::<Result<Vec<_>>>()?;
        let targets = self
            .targets
            .0
            .iter()
            .map(|(n, v)| Ok((n.clone(), vector("targets", n, v)?)))
            .collect::<Result<Vec<_>>>()?;
        let covering = BetaCovering::new(l, members, beta)?;
        Ok(Loaded { covering, targets })
    }

    /// The file describing `c` and `targets`.
    pub fn describe<L: ValueCodec>(
        lattice: LatticeDescriptor,
        c: &BetaCovering<L>,
        targets: &[(String, FuzzySet<L::Value>)],
        decimals: usize,
    ) -> Self {
        let l = c.lattice();
        let enc = |s: &FuzzySet<L::Value>| s.values().iter().map(|&v| l.encode_value(v, decimals)).collect();
        CoveringFile {
            lattice,
            beta: l.encode_value(c.beta(), decimals),
            universe: c.universe().labels().to_vec(),
            covering: NamedVectors(c.named_members().map(|(n, s)| (n.to_string(), enc(s))).collect()),
            targets: NamedVectors(targets.iter().map(|(n, s)| (n.clone(), enc(s))).collect()),
        }
    }
}
