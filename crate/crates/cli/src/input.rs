use std::path::Path;

use lrough::io::{CoveringFile, NamedVectors};
use lrough::{Error, FiniteLattice, LatticeDescriptor, Result};
use serde_json::Value as Json;

/// Reads a lattice given on the command line: a preset name or a JSON descriptor.
pub fn lattice_arg(s: &str) -> Result<LatticeDescriptor> {
    let t = s.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| Error::Parse(format!("--lattice: {e}")));
    }
    let chain = |rest: &str, luk: bool| -> Result<LatticeDescriptor> {
        let n = rest.parse().map_err(|_| Error::Parse(format!("--lattice: bad chain size `{rest}`")))?;
        let tnorm = luk.then_some(lrough::ChainTNorm::Lukasiewicz);
        Ok(LatticeDescriptor::FiniteChain { n, tnorm })
    };
    match t {
        "godel" => Ok(LatticeDescriptor::Godel),
        "lukasiewicz" => Ok(LatticeDescriptor::Lukasiewicz),
        "product" => Ok(LatticeDescriptor::Product),
        "boolean" => Ok(LatticeDescriptor::FiniteChain { n: 2, tnorm: None }),
        "table1" => Ok(LatticeDescriptor::of_finite(&FiniteLattice::table1())),
        _ => {
            if let Some(rest) = t.strip_prefix("chain:") {
                chain(rest, false)
            } else if let Some(rest) = t.strip_prefix("luk-chain:") {
                chain(rest, true)
            } else {
                Err(Error::Parse(format!("--lattice: unknown lattice `{t}`")))
            }
        }
    }
}

/// A CSV covering: header row of member names, first column of universe
/// labels. Columns named `@NAME` are targets.
pub fn covering_from_csv(text: &str, lattice: LatticeDescriptor, beta: &str) -> Result<CoveringFile> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    let header: Vec<String> = r.headers().map_err(|e| Error::Parse(format!("csv: {e}")))?.iter().map(String::from).collect();
    if header.len() < 2 {
        return Err(Error::Parse("csv: need a label column and at least one member column".into()));
    }
    let mut universe = Vec::new();
    let mut cols: Vec<Vec<Json>> = vec![Vec::new(); header.len() - 1];
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(format!("csv: {e}")))?;
        if rec.len() != header.len() {
            return Err(Error::Parse(format!("csv line {}: expected {} fields, found {}", i + 2, header.len(), rec.len())));
        }
        universe.push(rec[0].to_string());
        for (j, col) in cols.iter_mut().enumerate() {
            col.push(Json::String(rec[j + 1].to_string()));
        }
    }
    let mut covering = Vec::new();
    let mut targets = Vec::new();
    for (name, col) in header[1..].iter().zip(cols) {
        match name.strip_prefix('@') {
            Some(t) => targets.push((t.to_string(), col)),
            None => covering.push((name.clone(), col)),
        }
    }
    Ok(CoveringFile {
        lattice,
        beta: Json::String(beta.to_string()),
        universe,
        covering: NamedVectors(covering),
        targets: NamedVectors(targets),
    })
}

pub fn read_covering(path: &Path, lattice: Option<&str>, beta: Option<&str>) -> Result<CoveringFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        let lattice = lattice_arg(lattice.unwrap_or("godel"))?;
        return covering_from_csv(&text, lattice, beta.unwrap_or("1"));
    }
    let mut f = CoveringFile::parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })?;
    if let Some(l) = lattice {
        f.lattice = lattice_arg(l)?;
    }
    if let Some(b) = beta {
        f.beta = Json::String(b.to_string());
    }
    Ok(f)
}
