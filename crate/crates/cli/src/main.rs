use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use semigraphs::characterizations::{
    completeness, exhaustive_bound_from_env, verify_all_with, Structural, TheoremId, VerifyOptions,
};
use semigraphs::enumeration::{for_each_semigroup, run_verification, ReportRow, VerificationRun};
use semigraphs::graphs::{build_graph, export_graph, GraphKind, GraphSet};
use semigraphs::structure::is_commutative;
use semigraphs::{idempotents, CensusConfig, Error, FamilySpec, Semigroup};

/// Power, cyclic, enhanced power and commuting graphs of finite semigroups.
///
/// A SEMIGROUP argument is either a construct such as "M(3,2)", "B(2)",
/// "Zmult(4)", "Signs" or "C(6)xC(2)", or the path of a JSON Cayley table.
#[derive(Debug, Parser)]
#[command(name = "semigraphs", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a JSON Cayley table is an associative, closed table.
    Validate { path: PathBuf },
    /// Per-element index, period and idempotent, plus graph completeness.
    Analyze { semigroup: String },
    /// Export one of the four graphs.
    Graph {
        semigroup: String,
        #[arg(long, value_parser = parse_kind)]
        kind: GraphKind,
        #[arg(long, default_value = "dot", value_parser = ["dot", "json"])]
        format: String,
    },
    /// Compare every structural characterization with the graphs.
    Verify(VerifyArgs),
    /// Emit every semigroup of the given order as JSON lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Full per-theorem report over the census and the built-in families.
    Report(CorpusArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Verify a single semigroup.
    #[arg(long, conflicts_with = "census", required_unless_present = "census")]
    construct: Option<String>,
    /// Verify the census of small semigroups.
    #[arg(long)]
    census: bool,
    #[command(flatten)]
    corpus: CorpusArgs,
}

#[derive(Debug, Args)]
struct CorpusArgs {
    /// Largest census order (0 skips the census).
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(0..=5))]
    max_order: u8,
    /// Include the built-in families.
    #[arg(long)]
    families: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    workers: u16,
}

impl CorpusArgs {
    fn config(&self) -> CensusConfig {
        CensusConfig {
            max_order: usize::from(self.max_order),
            up_to_iso: true,
            worker_count: usize::from(self.workers),
            include_families: self.families,
            exhaustive_bound: exhaustive_bound_from_env(),
        }
    }
}

fn parse_kind(s: &str) -> Result<GraphKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit status and message for a failed command.
enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BadConstruct { .. } | Error::UnknownFormat(_) | Error::UnknownKind(_) | Error::OrderTooLarge(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn load(text: &str) -> Result<Semigroup, Failure> {
    let spec: FamilySpec = text.parse()?;
    Ok(spec.build()?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct ElementRow {
    id: usize,
    label: String,
    index: usize,
    period: usize,
    orbit_size: usize,
    idempotent: usize,
}

#[derive(Serialize)]
struct Analysis {
    semigroup: String,
    order: usize,
    elements: Vec<ElementRow>,
    idempotents: Vec<usize>,
    commutative: bool,
    complete: Completeness,
}

#[derive(Serialize)]
struct Completeness {
    power: bool,
    cyclic: bool,
    enhanced: bool,
    commuting: bool,
}

fn analyze(name: &str, s: &Semigroup) -> Analysis {
    let graphs = GraphSet::build(s);
    Analysis {
        semigroup: name.to_string(),
        order: s.order(),
        elements: s
            .profiles()
            .iter()
            .map(|p| ElementRow {
                id: p.generator,
                label: s.label(p.generator),
                index: p.index,
                period: p.period,
                orbit_size: p.order(),
                idempotent: p.idempotent,
            })
            .collect(),
        idempotents: idempotents(s).to_vec(),
        commutative: is_commutative(s),
        complete: {
            let [power, cyclic, enhanced, commuting] = completeness(&graphs).map(|(_, c)| c);
            Completeness {
                power,
                cyclic,
                enhanced,
                commuting,
            }
        },
    }
}

fn render_analysis(a: &Analysis, s: &Semigroup) -> String {
    let mut out = String::new();
    writeln!(out, "semigroup {} of order {}", a.semigroup, a.order).unwrap();
    let width = a.elements.iter().map(|e| e.label.len()).max().unwrap_or(0).max(5);
    writeln!(
        out,
        "{:>4}  {:<width$}  {:>5}  {:>6}  {:>5}  idempotent",
        "id", "label", "index", "period", "orbit"
    )
    .unwrap();
    for e in &a.elements {
        writeln!(
            out,
            "{:>4}  {:<width$}  {:>5}  {:>6}  {:>5}  {}",
            e.id,
            e.label,
            e.index,
            e.period,
            e.orbit_size,
            s.label(e.idempotent)
        )
        .unwrap();
    }
    let idem: Vec<String> = a.idempotents.iter().map(|&e| s.label(e)).collect();
    writeln!(out, "idempotents: {}", idem.join(", ")).unwrap();
    writeln!(out, "commutative: {}", yes_no(a.commutative)).unwrap();
    let c = &a.complete;
    writeln!(
        out,
        "complete: power {}, cyclic {}, enhanced {}, commuting {}",
        yes_no(c.power),
        yes_no(c.cyclic),
        yes_no(c.enhanced),
        yes_no(c.commuting)
    )
    .unwrap();
    out
}

fn render_row(row: &ReportRow) -> String {
    let r = &row.report;
    let mut line = format!(
        "{:<18} {:<14} {:<15} predicate={:<3} graph={:<3} {}",
        row.construct,
        r.theorem.to_string(),
        r.theorem.describe(),
        yes_no(r.predicate_verdict),
        yes_no(r.graph_verdict),
        if r.is_mismatch() { "MISMATCH" } else { "ok" }
    );
    if let Some(w) = &r.witness {
        write!(line, "  [{w}]").unwrap();
    }
    line
}

#[derive(Serialize)]
struct RunSummary<'a> {
    summary: String,
    theorems: usize,
    census_counts: &'a std::collections::BTreeMap<usize, usize>,
    families: usize,
    mismatches: Vec<&'a ReportRow>,
}

fn run_summary(run: &VerificationRun) -> RunSummary<'_> {
    RunSummary {
        summary: run.summary(),
        theorems: TheoremId::ALL.len(),
        census_counts: &run.census_counts,
        families: run.family_count,
        mismatches: run.mismatches().collect(),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, Failure> {
    match cli.command {
        Command::Validate { path } => {
            let s = Semigroup::load(&path)?;
            if cli.json {
                writeln!(out, "{}", serde_json::json!({"valid": true, "order": s.order()}))?;
            } else {
                writeln!(out, "{}: valid semigroup of order {}", path.display(), s.order())?;
            }
            Ok(true)
        }
        Command::Analyze { semigroup } => {
            let s = load(&semigroup)?;
            let a = analyze(&semigroup, &s);
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&a).expect("analysis serializes"))?;
            } else {
                write!(out, "{}", render_analysis(&a, &s))?;
            }
            Ok(true)
        }
        Command::Graph {
            semigroup,
            kind,
            format,
        } => {
            let s = load(&semigroup)?;
            let format = if cli.json { "json" } else { format.as_str() };
            let text = export_graph(&build_graph(&s, kind), format)?;
            write!(out, "{text}")?;
            if !text.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(true)
        }
        Command::Verify(args) => match args.construct {
            Some(construct) => {
                let s = load(&construct)?;
                let options = VerifyOptions {
                    exhaustive_bound: exhaustive_bound_from_env(),
                };
                let rows: Vec<ReportRow> = verify_all_with(&s, &GraphSet::build(&s), &Structural, &options)
                    .into_iter()
                    .map(|report| ReportRow {
                        construct: construct.clone(),
                        report,
                    })
                    .collect();
                let mismatches = rows.iter().filter(|r| r.report.is_mismatch()).count();
                for row in &rows {
                    if cli.json {
                        writeln!(out, "{}", serde_json::to_string(row).expect("row serializes"))?;
                    } else {
                        writeln!(out, "{}", render_row(row))?;
                    }
                }
                if !cli.json {
                    writeln!(out, "{} theorems × 1 semigroup, {mismatches} mismatches", rows.len())?;
                }
                Ok(mismatches == 0)
            }
            None => {
                let run = run_verification(&args.corpus.config(), &Structural)?;
                if cli.json {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&run_summary(&run)).expect("summary serializes")
                    )?;
                } else {
                    for row in run.mismatches() {
                        writeln!(out, "{}", render_row(row))?;
                    }
                    writeln!(out, "{}", run.summary())?;
                }
                let clean = run.mismatches().next().is_none();
            Ok(clean)
            }
        },
        Command::Enumerate { order, up_to_iso } => {
            let mut result = Ok(());
            for_each_semigroup(order, up_to_iso, |s| {
                if result.is_ok() {
                    result = writeln!(out, "{}", s.to_json());
                }
            })?;
            result?;
            Ok(true)
        }
        Command::Report(args) => {
            let run = run_verification(&args.config(), &Structural)?;
            for row in &run.rows {
                if cli.json {
                    writeln!(out, "{}", serde_json::to_string(row).expect("row serializes"))?;
                } else {
                    writeln!(out, "{}", render_row(row))?;
                }
            }
            if !cli.json {
                writeln!(out, "{}", run.summary())?;
            }
            let clean = run.mismatches().next().is_none();
            Ok(clean)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Invalid(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        (Ok(_), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
