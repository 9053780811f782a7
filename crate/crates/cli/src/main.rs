//! `lrough`: rough approximations over L-fuzzy β-coverings from the command line.
//!
//! Exit codes: 0 success, 1 output failure, 2 parse or validation error,
//! 3 domain error, 4 direct and matrix results disagree.

mod commands;
mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lrough::axioms::{self, io::OperatorFile, AxiomId};
use lrough::io::{AnyLoaded, CoveringFile};
use lrough::{Direction, Error, LatticeDescriptor, Pair};

use commands::{RelationKind, Via};
use render::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "lrough", version, about = "L-fuzzy beta-covering rough approximations")]
struct Cli {
    /// Covering file, JSON or CSV.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Equality tolerance for unit-interval lattices.
    #[arg(long, global = true, env = "LROUGH_TOLERANCE")]
    tolerance: Option<f64>,
    /// Lattice for CSV input, or to override the file's: godel, lukasiewicz,
    /// product, boolean, table1, chain:N, luk-chain:N or a JSON descriptor.
    #[arg(long, global = true)]
    lattice: Option<String>,
    /// Threshold for CSV input, or to override the file's.
    #[arg(long, global = true)]
    beta: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the input is a beta-covering.
    Validate,
    /// Apply one of the six operators to a target.
    Approx {
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, value_parser = parse_dir)]
        dir: Direction,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Via::Direct)]
        via: Via,
    },
    /// Remove reducible members.
    Reduct,
    /// Remove independent members.
    Core,
    /// The relation induced by the covering.
    Relation {
        #[arg(value_enum)]
        kind: RelationKind,
    },
    /// Matrix output.
    Matrix {
        #[command(subcommand)]
        action: MatrixAction,
    },
    /// Axiom checks on operator tables.
    Axioms {
        #[command(subcommand)]
        action: AxiomsAction,
    },
    /// Compare an operator with the one obtained from its dual.
    Duality {
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        /// Only this target; all targets by default.
        #[arg(long)]
        target: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum MatrixAction {
    /// The covering matrix, with targets as `@` columns.
    Dump,
}

#[derive(clap::Args, Debug)]
struct OperatorSource {
    /// A built-in counterexample.
    #[arg(long, conflicts_with = "operator")]
    counterexample: Option<String>,
    /// An operator table file.
    #[arg(long)]
    operator: Option<PathBuf>,
    #[arg(long, value_parser = parse_pair)]
    pair: Option<Pair>,
    #[arg(long, value_parser = parse_dir)]
    dir: Option<Direction>,
}

#[derive(Subcommand, Debug)]
enum AxiomsAction {
    /// Verdicts for each axiom. The operator comes from --counterexample,
    /// --operator or the covering given by --input with --pair and --dir.
    Check {
        #[command(flatten)]
        source: OperatorSource,
        /// Axioms to check; all by default.
        #[arg(long = "axiom", value_parser = parse_axiom)]
        axioms: Vec<AxiomId>,
    },
    /// A covering inducing the operator, for the given --pair and --dir.
    Reconstruct {
        #[command(flatten)]
        source: OperatorSource,
    },
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    s.parse().map_err(|_| format!("expected 1, 2 or 3, found `{s}`"))
}

fn parse_dir(s: &str) -> Result<Direction, String> {
    s.parse().map_err(|_| format!("expected lower or upper, found `{s}`"))
}

fn parse_axiom(s: &str) -> Result<AxiomId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed run and its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::BadCarrier(_)
            | Error::TableNotResiduated(_)
            | Error::UnknownLabel(_)
            | Error::BadUniverse(_)
            | Error::LengthMismatch { .. }
            | Error::DuplicateMember(_)
            | Error::UnknownMember(_)
            | Error::UnknownTarget(_)
            | Error::UnknownAxiom(_)
            | Error::UnknownCounterexample(_)
            | Error::ForeignValue(_) => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

struct Run {
    report: Report,
    code: u8,
    note: Option<String>,
}

impl From<Report> for Run {
    fn from(report: Report) -> Self {
        Run { report, code: 0, note: None }
    }
}

fn covering_file(cli: &Cli) -> Result<CoveringFile, Failure> {
    let path = cli.input.as_ref().ok_or_else(|| usage("--input is required for this command"))?;
    Ok(input::read_covering(path, cli.lattice.as_deref(), cli.beta.as_deref())?)
}

fn load(cli: &Cli) -> Result<(CoveringFile, AnyLoaded), Failure> {
    let f = covering_file(cli)?;
    let loaded = f.load(cli.tolerance)?;
    Ok((f, loaded))
}

/// Runs `$body` with `$d` bound to the loaded covering, whatever its lattice.
macro_rules! with_loaded {
    ($loaded:expr, $d:ident => $body:expr) => {
        match $loaded {
            AnyLoaded::Unit($d) => $body,
            AnyLoaded::Finite($d) => $body,
        }
    };
}

fn axioms_run(cli: &Cli, src: &OperatorSource, axioms: Option<&[AxiomId]>) -> Result<Run, Failure> {
    let theorem = match (src.pair, src.dir) {
        (Some(p), Some(d)) => Some((p, d)),
        (None, None) => None,
        _ => return Err(usage("--pair and --dir go together")),
    };
    let all: Vec<AxiomId> = match axioms {
        Some(a) if !a.is_empty() => a.to_vec(),
        _ => AxiomId::ALL.to_vec(),
    };
    let reconstructing = axioms.is_none();
    let finish = |source: &str, g: &axioms::OperatorTable<lrough::FiniteLattice>, beta, descriptor: LatticeDescriptor| {
        if reconstructing {
            let (p, d) = theorem.ok_or_else(|| usage("reconstruct needs --pair and --dir"))?;
            Ok(Run::from(commands::reconstruct(g, beta, p, d, descriptor)?))
        } else {
            Ok(Run::from(commands::axioms_check(source, g, beta, &all, theorem)?))
        }
    };
    if let Some(id) = &src.counterexample {
        let ce = axioms::counterexample(id)?;
        let descriptor = LatticeDescriptor::of_finite(ce.table.lattice());
        return finish(ce.id, &ce.table, ce.beta, descriptor);
    }
    if let Some(path) = &src.operator {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let file = OperatorFile::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let (g, beta) = file.build()?;
        return finish(&path.display().to_string(), &g, beta, file.lattice.clone());
    }
    let (file, loaded) = load(cli)?;
    let (p, d) = theorem.ok_or_else(|| usage("a covering input needs --pair and --dir"))?;
    let AnyLoaded::Finite(d_) = loaded else {
        return Err(Error::Undecidable("axiom checks need a finite lattice").into());
    };
    let g = axioms::OperatorTable::from_covering(&d_.covering, p, d)?;
    let source = format!("pair {p} {d} of {}", cli.input.as_ref().map(|p| p.display().to_string()).unwrap_or_default());
    finish(&source, &g, d_.covering.beta(), file.lattice)
}

fn run(cli: &Cli) -> Result<Run, Failure> {
    match &cli.command {
        Command::Validate => {
            let (_, loaded) = load(cli)?;
            Ok(with_loaded!(loaded, d => commands::validate(&d)).into())
        }
        Command::Approx { pair, dir, target, via } => {
            let (_, loaded) = load(cli)?;
            let (report, mismatch) = with_loaded!(loaded, d => commands::approx(&d, *pair, *dir, target, *via))?;
            Ok(if mismatch {
                Run { report, code: 4, note: Some("direct and matrix evaluations disagree".into()) }
            } else {
                report.into()
            })
        }
        Command::Reduct => {
            let (_, loaded) = load(cli)?;
            Ok(with_loaded!(loaded, d => commands::reduct(&d))?.into())
        }
        Command::Core => {
            let (_, loaded) = load(cli)?;
            Ok(with_loaded!(loaded, d => commands::core(&d))?.into())
        }
        Command::Relation { kind } => {
            let (_, loaded) = load(cli)?;
            Ok(with_loaded!(loaded, d => commands::relation(&d, *kind)).into())
        }
        Command::Matrix { action: MatrixAction::Dump } => {
            let (file, loaded) = load(cli)?;
            Ok(with_loaded!(loaded, d => commands::matrix_dump(&d, file.lattice.clone())).into())
        }
        Command::Duality { pair, target } => {
            let (_, loaded) = load(cli)?;
            Ok(with_loaded!(loaded, d => commands::duality(&d, *pair, target.as_deref()))?.into())
        }
        Command::Axioms { action: AxiomsAction::Check { source, axioms } } => axioms_run(cli, source, Some(axioms)),
        Command::Axioms { action: AxiomsAction::Reconstruct { source } } => axioms_run(cli, source, None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.tolerance {
        if !(t >= 0.0 && t.is_finite()) {
            eprintln!("error: tolerance must be a non-negative number");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(r) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(r.report.render(cli.format).as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            if let Some(note) = r.note {
                eprintln!("error: {note}");
            }
            ExitCode::from(r.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
