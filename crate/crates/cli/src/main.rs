//! `galrat`: analyze groups, sweep corpora, export character tables.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on
//! usage, parse or I/O errors.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use galrat_core::corpus::{self, CorpusEntry, GroupCheck, ScanReport, Tally};
use galrat_core::ingest::read_group_file;
use galrat_core::lab::{self, CheckOutcome};
use galrat_core::{Analysis, CharacterTable, Family, PermGroup};

#[derive(Parser)]
#[command(name = "galrat", version, about = "Rational classes and characters of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character table, Galois actions and rationality counts of one group.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run every check on every corpus entry and write the aggregate report.
    Scan {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Only entries of at most this order (default: no limit).
        #[arg(long)]
        max_order: Option<u64>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the JSON report to stdout instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// Run one checker over the corpus, or one of the standalone checks.
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        theorem: Theorem,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value_t = 100)]
        max_order: u64,
        /// Write every outcome as JSON here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Export the character table of one group as JSON.
    Table {
        #[command(flatten)]
        input: Input,
        /// Write the table here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Group file (`.json`, or `.jsonl` with one group per line).
    path: Option<PathBuf>,
    /// Family spec such as `dihedral:3` or `cyclic:2*cyclic:4`.
    #[arg(long, conflicts_with = "path")]
    family: Option<String>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Fixture directory; defaults to the bundled `fixtures/` when present.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Use the family-built groups only.
    #[arg(long, conflicts_with = "corpus")]
    builtin_only: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    A,
    B,
    C,
    Brauer,
    Column,
    Row,
    Sn,
    #[value(name = "2groups")]
    TwoGroups,
    S4s5,
    Orthogonality,
    Equivalence,
    Expected,
    Counterexamples,
}

impl Theorem {
    fn group_check(self) -> Option<GroupCheck> {
        Some(match self {
            Theorem::A => GroupCheck::TheoremA,
            Theorem::B => GroupCheck::TheoremB,
            Theorem::C => GroupCheck::TheoremC,
            Theorem::Brauer => GroupCheck::Brauer,
            Theorem::Column => GroupCheck::ColumnAnalysis,
            Theorem::Row => GroupCheck::RowAnalysis,
            Theorem::Orthogonality => GroupCheck::Orthogonality,
            Theorem::Equivalence => GroupCheck::Equivalence,
            Theorem::Expected => GroupCheck::Expected,
            _ => return None,
        })
    }
}

/// Usage, parse and I/O failures; exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { input, json } => analyze(&input, json),
        Command::Scan {
            corpus,
            max_order,
            report,
            json,
        } => scan(&corpus, max_order, report.as_deref(), json),
        Command::Verify {
            theorem,
            corpus,
            max_order,
            report,
            json,
        } => verify(theorem, &corpus, max_order, report.as_deref(), json),
        Command::Table { input, report } => table(&input, report.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("galrat: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_groups(input: &Input) -> Result<Vec<PermGroup>, UsageError> {
    match (&input.path, &input.family) {
        (Some(path), None) => {
            let specs = read_group_file(path)?;
            specs
                .iter()
                .map(|s| {
                    let mut g = s.build()?;
                    g.set_name(s.name.clone());
                    Ok(g)
                })
                .collect()
        }
        (None, Some(f)) => Ok(vec![f.parse::<Family>()?.build()?]),
        _ => Err(UsageError("give a group file or --family".into())),
    }
}

fn write_output(path: &Path, text: &str) -> Result<(), UsageError> {
    std::fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn analyze(input: &Input, as_json: bool) -> Result<bool, UsageError> {
    let mut records = Vec::new();
    for g in load_groups(input)? {
        let name = g.name().to_string();
        let a = Analysis::run(g).map_err(|e| UsageError(format!("{name}: {e}")))?;
        if as_json {
            records.push(analysis_json(&a));
        } else {
            print!("{}", render::analysis_text(&a));
        }
    }
    if as_json {
        let v = if records.len() == 1 { records.pop().unwrap() } else { json!(records) };
        println!("{}", serde_json::to_string_pretty(&v)?);
    }
    Ok(true)
}

fn analysis_json(a: &Analysis) -> serde_json::Value {
    let cd = a.table.class_data();
    let classes: Vec<serde_json::Value> = (0..cd.len())
        .map(|i| {
            json!({
                "size": cd.size(i),
                "order": cd.element_order(i),
                "centralizer_order": cd.centralizer_order(i),
                "field_degree": a.report.class_field_degrees[i],
                "rational": a.report.rational_classes.contains(&i),
            })
        })
        .collect();
    json!({
        "report": a.report,
        "classes": classes,
        "solvable": a.group.is_solvable(),
        "image_structure": lab::galois_image_structure(&a.report),
    })
}

fn table(input: &Input, report: Option<&Path>) -> Result<bool, UsageError> {
    let groups = load_groups(input)?;
    let [g] = groups.as_slice() else {
        return Err(UsageError(format!("expected one group, found {}", groups.len())));
    };
    let t = CharacterTable::compute(g).map_err(|e| UsageError(format!("{}: {e}", g.name())))?;
    let text = t.export_json();
    match report {
        Some(path) => write_output(path, &text)?,
        None => println!("{text}"),
    }
    Ok(true)
}

fn corpus_entries(args: &CorpusArgs) -> Result<Vec<CorpusEntry>, UsageError> {
    let dir = match &args.corpus {
        Some(d) => Some(d.clone()),
        None if args.builtin_only => None,
        None => Some(corpus::default_fixture_dir()).filter(|d| d.is_dir()),
    };
    Ok(corpus::assemble(dir.as_deref())?)
}

fn scan(args: &CorpusArgs, max_order: Option<u64>, report: Option<&Path>, as_json: bool) -> Result<bool, UsageError> {
    let mut entries = corpus_entries(args)?;
    if let Some(n) = max_order {
        entries = corpus::select(&entries, n);
    }
    let scan = ScanReport::build(&entries);
    let text = serde_json::to_string_pretty(&scan)?;
    if let Some(path) = report {
        write_output(path, &text)?;
    }
    if as_json {
        println!("{text}");
    } else {
        print!("{}", render::scan_text(&scan));
    }
    Ok(!scan.has_failures())
}

fn verify(
    theorem: Theorem,
    args: &CorpusArgs,
    max_order: u64,
    report: Option<&Path>,
    as_json: bool,
) -> Result<bool, UsageError> {
    let outcomes: Vec<CheckOutcome> = if let Some(check) = theorem.group_check() {
        let entries = corpus::select(&corpus_entries(args)?, max_order);
        corpus::process(&entries, &[check])
            .into_iter()
            .flat_map(|r| r.outcomes)
            .collect()
    } else {
        match theorem {
            Theorem::Sn => (3..=7).map(lab::abelian_sn_check).collect::<Result<_, _>>()?,
            Theorem::TwoGroups => {
                let mut out = Vec::new();
                for n in 3..=5 {
                    out.extend(lab::maximal_class_2group_check(n)?);
                }
                out
            }
            Theorem::S4s5 => vec![lab::s4_abelian_scan(), lab::s5_fixed_point_free_scan()],
            Theorem::Counterexamples => corpus::counterexample_checks(&corpus_entries(args)?),
            _ => unreachable!("group checks handled above"),
        }
    };
    let tallies = corpus::tally(&outcomes);
    let doc = json!({ "tallies": tallies, "outcomes": outcomes });
    if let Some(path) = report {
        write_output(path, &serde_json::to_string_pretty(&doc)?)?;
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        print!("{}", render::verify_text(&tallies, &outcomes));
    }
    Ok(tallies.values().all(|t: &Tally| t.fail == 0))
}
