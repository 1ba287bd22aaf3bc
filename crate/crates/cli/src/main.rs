//! `classbent` command-line front end.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict,
//! 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use classbent::construct::{make_bent_cyclic_with_tol, SequenceSpec};
use classbent::ledger::{verify_paper, LedgerConfig};
use classbent::search::{run_search, SearchConfig, Strategy};
use classbent::{is_bent, CharacterTable, ClassFunction};

#[derive(Parser)]
#[command(name = "classbent", version, about = "Bent class functions on small finite groups")]
struct Cli {
    /// Tolerance for unimodularity and derivative-sum checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group (Z<n>, Z<a>xZ<b>, S3, Q8, V4, D4).
    Chars { group: String },
    /// Decide bentness of a class function stored as JSON.
    Check { input: PathBuf },
    /// Build a certified bent class function on Z_n.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        n: usize,
        /// Zadoff–Chu root, coprime to n.
        root: Option<i64>,
    },
    /// Search coefficient space for a bent class function.
    Search {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::RandomPlusLocal)]
        strategy: StrategyArg,
    },
    /// Re-run every checkable claim and print the ledger.
    VerifyPaper {
        /// Evaluation budget for search-based entries; 0 skips them.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    ZadoffChu,
    Chirp,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Random,
    RandomPlusLocal,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if !(cli.tol > 0.0) {
        return Err(Failure(format!("--tol must be positive, got {}", cli.tol)));
    }
    if cli.format == Format::Csv && !matches!(cli.command, Command::Chars { .. }) {
        return Err(Failure("csv output is only available for chars".into()));
    }
    match &cli.command {
        Command::Chars { group } => {
            let table = CharacterTable::for_label(group)?;
            let text = match cli.format {
                Format::Json => pretty(&table.to_json_value()),
                Format::Csv => {
                    let (header, rows) = table.csv_rows();
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(&header)?;
                    for row in rows {
                        w.write_record(&row)?;
                    }
                    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)?
                }
            };
            emit(cli.output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Check { input } => {
            let text = fs::read_to_string(input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let f = ClassFunction::from_json(&text)?;
            let report = is_bent(&f, cli.tol);
            emit(cli.output.as_deref(), &report.to_json())?;
            Ok(if report.is_bent() { 0 } else { 1 })
        }
        Command::Construct { kind, n, root } => {
            let spec = match (kind, root) {
                (Kind::ZadoffChu, Some(u)) => SequenceSpec::zadoff_chu(*n, *u),
                (Kind::ZadoffChu, None) => {
                    return Err(Failure("zadoff-chu needs a root".into()))
                }
                (Kind::Chirp, None) => SequenceSpec::chirp(*n),
                (Kind::Chirp, Some(_)) => return Err(Failure("chirp takes no root".into())),
            };
            let built = make_bent_cyclic_with_tol(&spec, cli.tol)?;
            let mut value = serde_json::to_value(built.function.to_file())?;
            value["construction"] = serde_json::to_value(spec)?;
            value["report"] = serde_json::to_value(&built.report)?;
            emit(cli.output.as_deref(), &pretty(&value))?;
            Ok(0)
        }
        Command::Search {
            group,
            budget,
            strategy,
        } => {
            let config = SearchConfig {
                group: group.clone(),
                budget: *budget,
                seed: cli.seed,
                tol: cli.tol,
                strategy: match strategy {
                    StrategyArg::Random => Strategy::Random,
                    StrategyArg::RandomPlusLocal => Strategy::RandomPlusLocal,
                },
            };
            let result = run_search(&config)?;
            emit(cli.output.as_deref(), &result.to_json())?;
            Ok(0)
        }
        Command::VerifyPaper { budget } => {
            let ledger = verify_paper(&LedgerConfig {
                tol: cli.tol,
                budget: *budget,
                seed: cli.seed,
            });
            emit(cli.output.as_deref(), &ledger.to_json())?;
            let s = ledger.summary;
            eprintln!(
                "pass {} fail {} evidence {} skipped {}",
                s.pass, s.fail, s.evidence, s.skipped
            );
            Ok(if ledger.passed() { 0 } else { 1 })
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json value serializes")
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure(format!("cannot write {}: {e}", p.display()))),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}
