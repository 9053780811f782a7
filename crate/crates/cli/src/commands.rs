use lrough::axioms::{self, AxiomId, AxiomVerdict, OperatorTable, Witness};
use lrough::io::{CoveringFile, Loaded};
use lrough::lmatrix::{approx_via_matrix, m_covering, LatticeMatrix};
use lrough::reduction::{self, ReductionReport};
use lrough::{approximate, Direction, Error, FuzzySet, LatticeDescriptor, Pair, Result, ValueCodec};
use serde_json::{json, Map, Value as Json};

use crate::render::{Cell, Report, Table, LONG, SHORT};

fn cell<L: ValueCodec>(l: &L, v: L::Value) -> Cell {
    Cell::Value { long: l.encode_value(v, LONG), short: l.format_value(v, SHORT) }
}

fn json_set<L: ValueCodec>(l: &L, s: &FuzzySet<L::Value>) -> Json {
    let mut m = Map::new();
    for (i, &v) in s.values().iter().enumerate() {
        m.insert(s.universe().label(i).to_string(), l.encode_value(v, LONG));
    }
    Json::Object(m)
}

fn json_vec<L: ValueCodec>(l: &L, s: &FuzzySet<L::Value>) -> Json {
    Json::Array(s.values().iter().map(|&v| l.encode_value(v, LONG)).collect())
}

/// A matrix with labelled rows and columns.
fn matrix_table<L: ValueCodec>(l: &L, m: &LatticeMatrix<L::Value>, rows: &[String], cols: &[String]) -> Table {
    let mut t = Table::new(std::iter::once(String::new()).chain(cols.iter().cloned()));
    for (i, r) in rows.iter().enumerate() {
        t.push(std::iter::once(Cell::text(r)).chain(m.row(i).iter().map(|&v| cell(l, v))).collect());
    }
    t
}

fn matrix_json<L: ValueCodec>(l: &L, m: &LatticeMatrix<L::Value>, rows: &[String], cols: &[String]) -> Json {
    let mut out = Map::new();
    for (i, r) in rows.iter().enumerate() {
        let mut row = Map::new();
        for (j, c) in cols.iter().enumerate() {
            row.insert(c.clone(), l.encode_value(m.get(i, j), LONG));
        }
        out.insert(r.clone(), Json::Object(row));
    }
    Json::Object(out)
}

pub fn validate<L: ValueCodec>(d: &Loaded<L>) -> Report {
    let c = &d.covering;
    let l = c.lattice();
    let json = json!({
        "valid": true,
        "lattice": l.name(),
        "beta": l.encode_value(c.beta(), LONG),
        "max_beta": l.encode_value(c.max_beta(), LONG),
        "universe": c.universe().labels(),
        "members": c.names(),
        "targets": d.targets.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
    });
    let mut t = Table::new(["field", "value"]);
    t.push(vec![Cell::text("valid"), Cell::text("true")]);
    t.push(vec![Cell::text("lattice"), Cell::text(l.name())]);
    t.push(vec![Cell::text("beta"), cell(l, c.beta())]);
    t.push(vec![Cell::text("max_beta"), cell(l, c.max_beta())]);
    t.push(vec![Cell::text("universe"), Cell::text(c.universe().labels().join(" "))]);
    t.push(vec![Cell::text("members"), Cell::text(c.names().join(" "))]);
    Report { json, tables: vec![t] }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Via {
    Direct,
    Matrix,
    Both,
}

/// The result and whether the two evaluations disagree.
pub fn approx<L: ValueCodec>(d: &Loaded<L>, pair: Pair, dir: Direction, target: &str, via: Via) -> Result<(Report, bool)> {
    let c = &d.covering;
    let l = c.lattice();
    let x = d.target(target)?;
    let direct = matches!(via, Via::Direct | Via::Both).then(|| approximate(c, x, pair, dir)).transpose()?;
    let matrix = matches!(via, Via::Matrix | Via::Both).then(|| approx_via_matrix(c, x, pair, dir)).transpose()?;
    let mismatch = match (&direct, &matrix) {
        (Some(a), Some(b)) => a.values().iter().zip(b.values()).any(|(&p, &q)| !l.equiv(p, q)),
        _ => false,
    };
    let mut json = json!({
        "pair": pair.number(),
        "dir": dir.to_string(),
        "target": target,
        "via": format!("{via:?}").to_lowercase(),
    });
    let shown = direct.as_ref().or(matrix.as_ref()).expect("at least one evaluation");
    json["values"] = json_set(l, shown);
    if via == Via::Both {
        json["agree"] = Json::Bool(!mismatch);
        if mismatch {
            json["matrix_values"] = json_set(l, matrix.as_ref().expect("both"));
        }
    }
    let mut header = vec!["point".to_string(), "value".to_string()];
    if mismatch {
        header.push("matrix".into());
    }
    let mut t = Table::new(header);
    for i in 0..shown.len() {
        let mut row = vec![Cell::text(shown.universe().label(i)), cell(l, shown.get(i))];
        if mismatch {
            row.push(cell(l, matrix.as_ref().expect("both").get(i)));
        }
        t.push(row);
    }
    Ok((Report { json, tables: vec![t] }, mismatch))
}

fn reduction_report<L: ValueCodec>(r: &ReductionReport<L>) -> Report {
    let json = json!({
        "original": r.original,
        "removed": r.removed.iter().map(|m| json!({"name": m.name, "witnesses": m.witnesses})).collect::<Vec<_>>(),
        "surviving": r.surviving_names(),
    });
    let mut t = Table::new(["member", "status", "witnesses"]);
    for name in &r.original {
        let row = match r.removed.iter().find(|m| &m.name == name) {
            Some(m) => vec![Cell::text(name), Cell::text("removed"), Cell::text(m.witnesses.join(" "))],
            None => vec![Cell::text(name), Cell::text("kept"), Cell::text("")],
        };
        t.push(row);
    }
    Report { json, tables: vec![t] }
}

pub fn reduct<L: ValueCodec>(d: &Loaded<L>) -> Result<Report> {
    Ok(reduction_report(&reduction::reduct(&d.covering)?))
}

pub fn core<L: ValueCodec>(d: &Loaded<L>) -> Result<Report> {
    Ok(reduction_report(&reduction::core(&d.covering)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RelationKind {
    Arrow,
    Sym,
}

pub fn relation<L: ValueCodec>(d: &Loaded<L>, kind: RelationKind) -> Report {
    let c = &d.covering;
    let m = match kind {
        RelationKind::Arrow => c.relation_arrow().clone(),
        RelationKind::Sym => c.relation_sym(),
    };
    let labels = c.universe().labels();
    Report {
        json: json!({
            "relation": format!("{kind:?}").to_lowercase(),
            "matrix": matrix_json(c.lattice(), &m, labels, labels),
        }),
        tables: vec![matrix_table(c.lattice(), &m, labels, labels)],
    }
}

/// `M_C` with targets as `@` columns; both forms read back as input.
pub fn matrix_dump<L: ValueCodec>(d: &Loaded<L>, lattice: LatticeDescriptor) -> Report {
    let c = &d.covering;
    let l = c.lattice();
    let file = CoveringFile::describe(lattice, c, &d.targets, LONG);
    let json = serde_json::to_value(&file).expect("covering files serialize");
    let mut cols: Vec<String> = c.names().to_vec();
    cols.extend(d.targets.iter().map(|(n, _)| format!("@{n}")));
    let m = m_covering(c);
    let full = LatticeMatrix::from_fn(m.rows(), cols.len(), |i, j| {
        if j < m.cols() {
            m.get(i, j)
        } else {
            d.targets[j - m.cols()].1.get(i)
        }
    });
    Report { json, tables: vec![matrix_table(l, &full, c.universe().labels(), &cols)] }
}

pub fn duality<L: ValueCodec>(d: &Loaded<L>, pair: Pair, target: Option<&str>) -> Result<Report> {
    let c = &d.covering;
    let l = c.lattice();
    let targets: Vec<(&str, &FuzzySet<L::Value>)> = match target {
        Some(name) => vec![(name, d.target(name)?)],
        None => d.targets.iter().map(|(n, s)| (n.as_str(), s)).collect(),
    };
    if targets.is_empty() {
        return Err(Error::Parse("the input has no targets".into()));
    }
    let derived = match pair {
        Pair::One => "upper",
        _ => "lower",
    };
    let mut results = Vec::new();
    let mut tables = Vec::new();
    for (name, x) in targets {
        let v = axioms::check_duality(c, x, pair)?;
        results.push(json!({
            "target": name,
            "holds": v.holds,
            "direct": json_set(l, &v.direct),
            "via_dual": json_set(l, &v.via_dual),
            "first_difference": v.witness.map(|i| c.universe().label(i).to_string()),
        }));
        let mut t = Table::new(["point", "direct", "via_dual"])
            .titled(format!("{name}: {derived} {}", if v.holds { "agrees" } else { "differs" }));
        for i in 0..x.len() {
            t.push(vec![Cell::text(x.universe().label(i)), cell(l, v.direct.get(i)), cell(l, v.via_dual.get(i))]);
        }
        tables.push(t);
    }
    Ok(Report { json: json!({"pair": pair.number(), "derived": derived, "results": results}), tables })
}

fn witness_json<L: ValueCodec>(g: &OperatorTable<L>, w: &Witness<L::Value>) -> Json {
    let l = g.lattice();
    json!({
        "sets": w.sets.iter().map(|s| json_vec(l, s)).collect::<Vec<_>>(),
        "scalars": w.scalars.iter().map(|&a| l.encode_value(a, LONG)).collect::<Vec<_>>(),
        "points": w.points.iter().map(|&i| g.universe().label(i).to_string()).collect::<Vec<_>>(),
    })
}

fn witness_text<L: ValueCodec>(g: &OperatorTable<L>, w: &Witness<L::Value>) -> String {
    let l = g.lattice();
    let set = |s: &FuzzySet<L::Value>| {
        let vals: Vec<String> = s.values().iter().map(|&v| l.format_value(v, SHORT)).collect();
        format!("({})", vals.join(","))
    };
    let mut parts: Vec<String> = Vec::new();
    if !w.sets.is_empty() {
        parts.push(format!("sets {}", w.sets.iter().map(set).collect::<Vec<_>>().join(" ")));
    }
    if !w.scalars.is_empty() {
        let a: Vec<String> = w.scalars.iter().map(|&v| l.format_value(v, SHORT)).collect();
        parts.push(format!("alpha {}", a.join(" ")));
    }
    if !w.points.is_empty() {
        let p: Vec<&str> = w.points.iter().map(|&i| g.universe().label(i)).collect();
        parts.push(format!("points {}", p.join(" ")));
    }
    if parts.is_empty() {
        "empty family".into()
    } else {
        parts.join("; ")
    }
}

/// Verdicts for `axioms` on `g`, plus the theorem's axiom set when a pair and direction are given.
pub fn axioms_check<L: ValueCodec>(
    source: &str,
    g: &OperatorTable<L>,
    beta: L::Value,
    axioms: &[AxiomId],
    theorem: Option<(Pair, Direction)>,
) -> Result<Report> {
    let l = g.lattice();
    let verdicts: Vec<AxiomVerdict<L::Value>> =
        axioms.iter().map(|&a| axioms::check_axiom(g, beta, a)).collect::<Result<_>>()?;
    let mut t = Table::new(["axiom", "holds", "witness"]);
    let mut out = Vec::new();
    for v in &verdicts {
        let mut o = json!({"axiom": v.axiom.name(), "holds": v.holds});
        if let Some(w) = &v.witness {
            o["witness"] = witness_json(g, w);
        }
        out.push(o);
        t.push(vec![
            Cell::text(v.axiom.name()),
            Cell::text(v.holds.to_string()),
            Cell::text(v.witness.as_ref().map(|w| witness_text(g, w)).unwrap_or_default()),
        ]);
    }
    let mut json = json!({
        "source": source,
        "lattice": l.name(),
        "beta": l.encode_value(beta, LONG),
        "holding": verdicts.iter().filter(|v| v.holds).map(|v| v.axiom.name()).collect::<Vec<_>>(),
        "verdicts": out,
    });
    let mut tables = vec![t];
    if let Some((pair, dir)) = theorem {
        let needed = axioms::theorem_axioms(pair, dir);
        let missing = axioms::failing(g, beta, needed)?;
        let lattice_ok = axioms::check_lattice_requirement(l, pair, dir);
        json["theorem"] = json!({
            "pair": pair.number(),
            "dir": dir.to_string(),
            "axioms": needed.iter().map(|a| a.name()).collect::<Vec<_>>(),
            "failing": missing.iter().map(|a| a.name()).collect::<Vec<_>>(),
            "lattice_ok": lattice_ok.is_ok(),
        });
        let mut s = Table::new(["pair", "dir", "axioms", "failing", "lattice_ok"]).titled("theorem");
        s.push(vec![
            Cell::text(pair.to_string()),
            Cell::text(dir.to_string()),
            Cell::text(needed.iter().map(|a| a.name()).collect::<Vec<_>>().join(" ")),
            Cell::text(missing.iter().map(|a| a.name()).collect::<Vec<_>>().join(" ")),
            Cell::text(lattice_ok.is_ok().to_string()),
        ]);
        tables.push(s);
    }
    Ok(Report { json, tables })
}

/// A covering that induces `g`, written as a covering file.
pub fn reconstruct<L: ValueCodec>(
    g: &OperatorTable<L>,
    beta: L::Value,
    pair: Pair,
    dir: Direction,
    lattice: LatticeDescriptor,
) -> Result<Report> {
    let r = axioms::reconstruct_covering(g, beta, pair, dir)?;
    let file = CoveringFile::describe(lattice, &r.covering, &[], LONG);
    let mut json = serde_json::to_value(&file).expect("covering files serialize");
    let c = &r.covering;
    let m = m_covering(c);
    let mut t = matrix_table(g.lattice(), &m, c.universe().labels(), c.names());
    t.title = Some(format!("method: {}", r.method));
    if let Json::Object(o) = &mut json {
        // Kept outside the file fields so the file part reads back unchanged.
        let file = Json::Object(std::mem::take(o));
        *o = Map::new();
        o.insert("method".into(), Json::String(r.method.to_string()));
        o.insert("covering_file".into(), file);
    }
    Ok(Report { json, tables: vec![t] })
}
