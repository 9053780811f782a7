use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use super::{Elem, FiniteLattice, ResiduatedLattice, TNormKind, UnitInterval};
use crate::error::{Error, Result};
use crate::scalar::UnitScalar;

/// Which t-norm a `finite_chain` descriptor uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainTNorm {
    #[default]
    Godel,
    Lukasiewicz,
}

/// Serializable description of a lattice, as found in covering files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LatticeDescriptor {
    Godel,
    Lukasiewicz,
    Product,
    FiniteChain {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tnorm: Option<ChainTNorm>,
    },
    /// Carrier names, bottom first and top last, with both tables by name.
    Table {
        carrier: Vec<String>,
        tnorm: Vec<Vec<String>>,
        #[serde(rename = "impl")]
        implication: Vec<Vec<String>>,
    },
}

/// A lattice built from a descriptor: either a unit-interval preset or a finite table.
#[derive(Clone, Debug)]
pub enum AnyLattice {
    Unit(UnitInterval<f64>),
    Finite(FiniteLattice),
}

impl LatticeDescriptor {
    /// Builds the lattice. `tolerance` only affects unit-interval kinds.
    pub fn build(&self, tolerance: Option<f64>) -> Result<AnyLattice> {
        let unit = |k| {
            let l = UnitInterval::<f64>::new(k);
            AnyLattice::Unit(match tolerance {
                Some(t) => l.with_tolerance(t),
                None => l,
            })
        };
        Ok(match self {
            LatticeDescriptor::Godel => unit(TNormKind::Godel),
            LatticeDescriptor::Lukasiewicz => unit(TNormKind::Lukasiewicz),
            LatticeDescriptor::Product => unit(TNormKind::Product),
            LatticeDescriptor::FiniteChain { n, tnorm } => AnyLattice::Finite(match tnorm.unwrap_or_default() {
                ChainTNorm::Godel => FiniteLattice::chain_godel(*n)?,
                ChainTNorm::Lukasiewicz => FiniteLattice::chain_lukasiewicz(*n)?,
            }),
            LatticeDescriptor::Table { carrier, tnorm, implication } => {
                let index = |t: &Vec<Vec<String>>, what: &str| -> Result<Vec<Vec<usize>>> {
                    t.iter()
                        .map(|row| {
                            row.iter()
                                .map(|name| {
                                    carrier.iter().position(|c| c == name).ok_or_else(|| {
                                        Error::BadCarrier(format!("{what} table mentions unknown element {name}"))
                                    })
                                })
                                .collect()
                        })
                        .collect()
                };
                let tn = index(tnorm, "tnorm")?;
                let im = index(implication, "impl")?;
                AnyLattice::Finite(FiniteLattice::from_tables(carrier.clone(), &tn, &im)?)
            }
        })
    }

    /// Descriptor of a finite lattice as explicit tables.
    pub fn of_finite(l: &FiniteLattice) -> Self {
        let names = l.names().to_vec();
        let by_name = |t: Vec<Vec<usize>>| -> Vec<Vec<String>> {
            t.into_iter().map(|r| r.into_iter().map(|i| names[i].clone()).collect()).collect()
        };
        LatticeDescriptor::Table {
            carrier: names.clone(),
            tnorm: by_name(l.tnorm_table()),
            implication: by_name(l.implication_table()),
        }
    }
}

/// Conversion between lattice values and JSON.
pub trait ValueCodec: ResiduatedLattice {
    fn parse_value(&self, v: &Json) -> Result<Self::Value>;
    fn encode_value(&self, a: Self::Value, decimals: usize) -> Json;
}

impl<T: UnitScalar> ValueCodec for UnitInterval<T> {
    fn parse_value(&self, v: &Json) -> Result<T> {
        let text = match v {
            Json::Number(n) => n.to_string(),
            Json::String(s) => s.trim().to_string(),
            other => return Err(Error::Parse(format!("expected a number, found {other}"))),
        };
        let x = parse_decimal::<T>(&text).ok_or_else(|| Error::Parse(format!("not a number: {text}")))?;
        self.check(x)
    }

    fn encode_value(&self, a: T, decimals: usize) -> Json {
        let s = self.format_value(a, decimals);
        serde_json::from_str(&s).unwrap_or(Json::Null)
    }
}

impl ValueCodec for FiniteLattice {
    fn parse_value(&self, v: &Json) -> Result<Elem> {
        match v {
            Json::String(s) => self.elem(s).ok_or_else(|| Error::ForeignValue(s.clone())),
            Json::Number(n) => {
                let name = n.to_string();
                if let Some(e) = self.elem(&name) {
                    return Ok(e);
                }
                let x = n.as_f64().ok_or_else(|| Error::Parse(name.clone()))?;
                self.elem_from_f64(x, 1e-9).ok_or(Error::ForeignValue(name))
            }
            other => Err(Error::Parse(format!("expected an element name, found {other}"))),
        }
    }

    fn encode_value(&self, a: Elem, _decimals: usize) -> Json {
        Json::String(self.name_of(a).to_string())
    }
}

/// Parses `"0.25"`, `"1/4"` or `"2.5e-1"` into `T`, exactly where `T` allows.
pub fn parse_decimal<T: UnitScalar>(s: &str) -> Option<T> {
    let int = |d: &str| -> Option<T> {
        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        d.parse::<u64>().ok().and_then(T::from_u64)
    };
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let exact = || -> Option<T> {
        Some(if let Some((n, d)) = body.split_once('/') {
            let d = int(d.trim())?;
            if d.is_zero() {
                return None;
            }
            int(n.trim())? / d
        } else if let Some((i, f)) = body.split_once('.') {
            let i = if i.is_empty() { T::zero() } else { int(i)? };
            if f.is_empty() {
                i
            } else {
                let scale = int(&format!("1{}", "0".repeat(f.len())))?;
                i + int(f)? / scale
            }
        } else {
            int(body)?
        })
    };
    let x = match exact() {
        Some(x) => x,
        None if body.contains('/') => return None,
        None => T::from_f64(body.parse::<f64>().ok().filter(|v| v.is_finite())?)?,
    };
    Some(if neg { T::zero() - x } else { x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn descriptors_parse() {
        let d: LatticeDescriptor = serde_json::from_str(r#"{"kind":"godel"}"#).unwrap();
        assert_eq!(d, LatticeDescriptor::Godel);
        let d: LatticeDescriptor =
            serde_json::from_str(r#"{"kind":"finite_chain","n":5,"tnorm":"lukasiewicz"}"#).unwrap();
        match d.build(None).unwrap() {
            AnyLattice::Finite(l) => assert!(l.is_regular().unwrap()),
            _ => panic!("expected a finite lattice"),
        }
        let d: LatticeDescriptor = serde_json::from_str(
            r#"{"kind":"table","carrier":["0","a","1"],
                "tnorm":[["0","0","0"],["0","a","a"],["0","a","1"]],
                "impl":[["1","1","1"],["0","1","1"],["0","a","1"]]}"#,
        )
        .unwrap();
        let AnyLattice::Finite(l) = d.build(None).unwrap() else { panic!() };
        assert_eq!(LatticeDescriptor::of_finite(&l), d);
    }

    #[test]
    fn bad_table_is_rejected() {
        let d: LatticeDescriptor = serde_json::from_str(
            r#"{"kind":"table","carrier":["0","a","1"],
                "tnorm":[["0","0","0"],["0","a","a"],["0","a","1"]],
                "impl":[["1","1","1"],["a","1","1"],["0","a","1"]]}"#,
        )
        .unwrap();
        assert!(matches!(d.build(None), Err(Error::TableNotResiduated(_))));
    }

    #[test]
    fn decimals_are_exact_for_rationals() {
        assert_eq!(parse_decimal::<Ratio<i64>>("0.6"), Some(Ratio::new(3, 5)));
        assert_eq!(parse_decimal::<Ratio<i64>>("1/3"), Some(Ratio::new(1, 3)));
        assert_eq!(parse_decimal::<Ratio<i64>>("1"), Some(Ratio::new(1, 1)));
        assert_eq!(parse_decimal::<f64>("2.5e-1"), Some(0.25));
        assert_eq!(parse_decimal::<f64>("abc"), None);
        assert_eq!(parse_decimal::<f64>("1/0"), None);
    }

    #[test]
    fn codec_round_trip() {
        let g = UnitInterval::<f64>::godel();
        let v = g.parse_value(&serde_json::json!(0.7)).unwrap();
        assert_eq!(g.encode_value(v, 9).as_f64(), Some(0.7));
        assert!(g.parse_value(&serde_json::json!(1.2)).is_err());
        let t = FiniteLattice::table1();
        let a = t.parse_value(&serde_json::json!("a")).unwrap();
        assert_eq!(t.encode_value(a, 9), serde_json::json!("a"));
        let c = FiniteLattice::chain_godel(3).unwrap();
        assert_eq!(c.parse_value(&serde_json::json!(0.5)).unwrap(), Elem(1));
    }
}
