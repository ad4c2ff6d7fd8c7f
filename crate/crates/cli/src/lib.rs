//! `admcalc`: tables, generating functions and verification suites for the
//! admissible-cover integrals, with exact `p/q` output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use admcalc_core::hodge::{
    conjecture_series, i_series, j_series, l2_table, l3_table, l_series, p2_closed,
    p3_full_closed, p3_full_series, p3_trans_closed, p3_trans_series,
};
use admcalc_core::hurwitz::{hurwitz_count_bounded, max_tuples_from_env, BranchProfile, CycleType};
use admcalc_core::{Rational, TruncatedSeries};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub mod output;
pub mod suites;

use output::{render, Format, Kind, OutputRecord, Status};
use suites::{run_suite, Suite};

pub const DEFAULT_ORDER: usize = 21;
pub const DEFAULT_GMAX: usize = 10;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "admcalc", version, about = "Exact Hodge-type integrals on moduli of admissible covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a generating function as a truncated series.
    Series(SeriesArgs),
    /// Print a table of values indexed by genus.
    Table(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Count covers with prescribed monodromy by enumeration.
    Hurwitz(HurwitzArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesWhat {
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
    #[value(name = "L")]
    L,
    #[value(name = "P")]
    P,
    #[value(name = "conjecture")]
    Conjecture,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[arg(long)]
    degree: u32,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value = "I")]
    what: SeriesWhat,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableWhat {
    #[value(name = "L2")]
    L2,
    #[value(name = "L3")]
    L3,
    #[value(name = "I2")]
    I2,
    #[value(name = "I3")]
    I3,
    #[value(name = "J2")]
    J2,
    #[value(name = "J3")]
    J3,
    #[value(name = "P2")]
    P2,
    #[value(name = "P3full")]
    P3Full,
    #[value(name = "P3trans")]
    P3Trans,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    what: TableWhat,
    #[arg(long, default_value_t = DEFAULT_GMAX)]
    gmax: usize,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Debug, Args)]
struct Sink {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run every suite (the default when no suite is named).
    #[arg(long, conflicts_with = "suite")]
    all: bool,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    #[arg(long, default_value_t = DEFAULT_GMAX)]
    gmax: usize,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Debug, Args)]
struct HurwitzArgs {
    #[arg(long)]
    degree: usize,
    /// Cycle type over one branch point, e.g. `2,1`; repeat per point.
    #[arg(long = "profile")]
    profiles: Vec<CycleType>,
    /// Count possibly disconnected covers too.
    #[arg(long)]
    disconnected: bool,
    /// Refuse enumerations above this many tuples.
    #[arg(long)]
    max_tuples: Option<u128>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] admcalc_core::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_FAILED,
        }
    }
}

/// Parses `args` (program name first) and runs the command against the
/// process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "admcalc: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Series(args) => {
            let records = series_records(&args)?;
            emit(&records, &args.sink, out)?;
            Ok(EXIT_OK)
        }
        Command::Table(args) => {
            let records = vec![table_record(args.what, args.gmax)];
            emit(&records, &args.sink, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => verify(&args, out),
        Command::Hurwitz(args) => {
            let bound = args.max_tuples.unwrap_or_else(max_tuples_from_env);
            let profile = BranchProfile::new(args.degree, args.profiles)?;
            let count = hurwitz_count_bounded(&profile, !args.disconnected, bound)?;
            write_stdout(out, &format!("{count}\n"))?;
            Ok(EXIT_OK)
        }
    }
}

fn series_record(name: String, degree: u32, series: &TruncatedSeries) -> OutputRecord {
    let mut r = OutputRecord::new(Kind::Series, name).with_values(series.coeffs());
    r.degree = Some(degree);
    r.order = Some(series.order());
    r
}

fn series_records(args: &SeriesArgs) -> Result<Vec<OutputRecord>, CliError> {
    let (d, n) = (args.degree, args.order);
    let records = match args.what {
        SeriesWhat::I => vec![series_record(format!("I{d}"), d, &i_series(d, n)?)],
        SeriesWhat::J => vec![series_record(format!("J{d}"), d, &j_series(d, n)?)],
        SeriesWhat::L => vec![series_record(format!("L{d}"), d, &l_series(d, n)?)],
        SeriesWhat::P if d == 3 => vec![
            series_record("P3full".into(), 3, &p3_full_series(n)),
            series_record("P3trans".into(), 3, &p3_trans_series(n)),
        ],
        SeriesWhat::P => {
            return Err(CliError::Usage(format!(
                "--what P has generating functions in degree 3 only (got {d})"
            )))
        }
        SeriesWhat::Conjecture => {
            if d == 0 {
                return Err(CliError::Usage("--degree must be at least 1".into()));
            }
            if n + 1 < d as usize {
                return Err(CliError::Usage(format!("--order must be at least {}", d - 1)));
            }
            let mut r = series_record(format!("conjecture{d}"), d, &conjecture_series(d, n)?);
            r.note = Some(if d <= 3 { "established" } else { "conjectural" }.into());
            vec![r]
        }
    };
    Ok(records)
}

fn table_record(what: TableWhat, gmax: usize) -> OutputRecord {
    let (name, degree, values): (&str, u32, Vec<Rational>) = match what {
        TableWhat::L2 => ("L2", 2, l2_table(gmax).l().to_vec()),
        TableWhat::I2 => ("I2", 2, l2_table(gmax).i().to_vec()),
        TableWhat::J2 => ("J2", 2, l2_table(gmax).j().to_vec()),
        TableWhat::L3 => ("L3", 3, l3_table(gmax).l().to_vec()),
        TableWhat::I3 => ("I3", 3, l3_table(gmax).i().to_vec()),
        TableWhat::J3 => ("J3", 3, l3_table(gmax).j().to_vec()),
        TableWhat::P2 => ("P2", 2, (0..=gmax).map(p2_closed).collect()),
        TableWhat::P3Full => ("P3full", 3, (0..=gmax).map(p3_full_closed).collect()),
        TableWhat::P3Trans => ("P3trans", 3, (0..=gmax).map(p3_trans_closed).collect()),
    };
    let mut r = OutputRecord::new(Kind::Table, name).with_values(&values);
    r.degree = Some(degree);
    r.gmax = Some(gmax);
    r
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.sink.format == Format::Csv {
        return Err(CliError::Usage("verify supports --format text or json".into()));
    }
    let selected: Vec<Suite> = match args.suite {
        Some(s) if !args.all => vec![s],
        _ => Suite::ALL.to_vec(),
    };
    let mut records = Vec::with_capacity(selected.len());
    for suite in selected {
        let report = run_suite(suite, args.gmax, args.order)?;
        let mut record = OutputRecord::new(Kind::Verification, suite.name());
        record.gmax = Some(args.gmax);
        record.order = Some(args.order);
        record.status = Some(if report.passed { Status::Pass } else { Status::Fail });
        record.note = Some(report.detail);
        records.push(record);
    }
    let all_passed = records.iter().all(|r| r.status == Some(Status::Pass));
    if args.sink.format == Format::Json {
        emit(&records, &args.sink, out)?;
    } else {
        let mut text = String::new();
        for r in &records {
            let tag = if r.status == Some(Status::Pass) { "PASS" } else { "FAIL" };
            text.push_str(&format!("{tag} {}: {}\n", r.name, r.note.as_deref().unwrap_or("")));
        }
        text.push_str(if all_passed { "all suites passed\n" } else { "some suites failed\n" });
        match &args.sink.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
            None => write_stdout(out, &text)?,
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILED })
}

fn write_stdout(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn emit(records: &[OutputRecord], sink: &Sink, out: &mut dyn Write) -> Result<(), CliError> {
    let text = render(records, sink.format);
    match &sink.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => write_stdout(out, &text),
    }
}
