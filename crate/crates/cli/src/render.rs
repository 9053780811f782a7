use std::fmt::Write as _;

use serde_json::Value as Json;

/// Decimals in json and csv output.
pub const LONG: usize = 9;
/// Decimals in table output.
pub const SHORT: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Clone, Debug)]
pub enum Cell {
    Text(String),
    /// A lattice value at both precisions.
    Value { long: Json, short: String },
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn render(&self, format: Format) -> String {
        match (self, format) {
            (Cell::Text(s), _) => s.clone(),
            (Cell::Value { short, .. }, Format::Table) => short.clone(),
            (Cell::Value { long: Json::String(s), .. }, _) => s.clone(),
            (Cell::Value { long, .. }, _) => long.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub title: Option<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Table { title: None, header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn titled(mut self, t: impl Into<String>) -> Self {
        self.title = Some(t.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }
}

/// What a command prints.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Json,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Table => self.tables.iter().map(aligned).collect::<Vec<_>>().join("\n"),
            Format::Csv => self.tables.iter().map(csv_text).collect::<Vec<_>>().join("\n"),
        }
    }
}

fn aligned(t: &Table) -> String {
    let rows: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(|c| c.render(Format::Table)).collect()).collect();
    let ncol = t.header.len().max(rows.iter().map(Vec::len).max().unwrap_or(0));
    let width: Vec<usize> = (0..ncol)
        .map(|j| {
            let h = t.header.get(j).map_or(0, |s| s.chars().count());
            rows.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).fold(h, usize::max)
        })
        .collect();
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (j, c) in cells.iter().enumerate() {
            if j > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{c:<w$}", w = width[j]);
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = String::new();
    if let Some(title) = &t.title {
        out.push_str(title);
        out.push('\n');
    }
    if !t.header.is_empty() {
        out.push_str(&line(&t.header));
    }
    for r in &rows {
        out.push_str(&line(r));
    }
    out
}

fn csv_text(t: &Table) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    if let Some(title) = &t.title {
        w.write_record([format!("# {title}")]).expect("in-memory write");
    }
    if !t.header.is_empty() {
        w.write_record(&t.header).expect("in-memory write");
    }
    for r in &t.rows {
        w.write_record(r.iter().map(|c| c.render(Format::Csv))).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
