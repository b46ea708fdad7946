//! Argument handling, batch fan-out and output routing.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bundle::{ReportBundle, FORMAT_VERSION};
use crate::dsl::{parse_chain, parse_params};
use crate::error::{exit, CliError, Diagnostic, DiagnosticEnvelope};
use crate::export::{plot_csv, to_json, PLOT_POINTS};
use crate::run::{run, Command, Options, MAX_LEVELS};
use isodbt::isotonic::IsotonicParams;
use isodbt::numeric::GridSpec;

pub const THREADS_ENV: &str = "ISODBT_THREADS";

#[derive(Parser, Debug)]
#[command(name = "isodbt", version, about = "Rational extensions of the isotonic oscillator")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Extended potential and eigenstates.
    Build(Args),
    /// Every exact and numerical check on the chain.
    Verify(Args),
    /// Finite-difference spectrum against 2 k omega.
    Spectrum(Args),
    /// Eigenstate numerator coefficients and orthogonality weight.
    Table(Args),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
struct Args {
    /// Steps such as "1+,2-"; empty for the unextended oscillator.
    #[arg(long, required_unless_present = "batch", conflicts_with = "batch", allow_hyphen_values = true)]
    chain: Option<String>,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    omega: String,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, default_value_t = 4)]
    levels: u32,
    /// N:x_min:x_max
    #[arg(long)]
    grid: Option<String>,
    /// Absolute eigenvalue tolerance.
    #[arg(long, default_value_t = 1e-6, allow_hyphen_values = true)]
    tol: f64,
    /// Directory for report.json (and plot.csv); stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// File with one chain per line; blank lines and '#' comments skipped.
    #[arg(long)]
    batch: Option<PathBuf>,
}

impl Sub {
    fn split(self) -> (Command, Args) {
        match self {
            Sub::Build(a) => (Command::Build, a),
            Sub::Verify(a) => (Command::Verify, a),
            Sub::Spectrum(a) => (Command::Spectrum, a),
            Sub::Table(a) => (Command::Table, a),
        }
    }
}

pub fn parse_grid(text: &str) -> Result<GridSpec, CliError> {
    let bad = |why: String| CliError::Input(format!("--grid expects N:x_min:x_max, {why}"));
    let parts: Vec<&str> = text.split(':').collect();
    let [n, lo, hi] = parts.as_slice() else {
        return Err(bad(format!("got {text:?}")));
    };
    let n: usize = n.trim().parse().map_err(|_| bad(format!("bad point count {n:?}")))?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad(format!("bad x_min {lo:?}")))?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad(format!("bad x_max {hi:?}")))?;
    GridSpec::new(n, lo, hi).map_err(CliError::input)
}

fn options(args: &Args) -> Result<Options, CliError> {
    if args.levels == 0 || args.levels > MAX_LEVELS {
        return Err(CliError::Input(format!("--levels must lie in 1..={MAX_LEVELS}")));
    }
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(CliError::Input("--tol must be positive and finite".to_string()));
    }
    Ok(Options { levels: args.levels, grid: args.grid.as_deref().map(parse_grid).transpose()?, tolerance: args.tol })
}

/// One line of a batch run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchEntry {
    /// 1-based line number in the batch file.
    pub line: usize,
    pub chain: String,
    pub exit_code: i32,
    pub report: Option<ReportBundle>,
    pub error: Option<Diagnostic>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub format_version: u32,
    pub entries: Vec<BatchEntry>,
}

fn run_text(command: Command, text: &str, params: &IsotonicParams, opts: &Options) -> (Option<ReportBundle>, Option<CliError>) {
    match parse_chain(text, params) {
        Err(e) => (None, Some(e.into())),
        Ok(chain) => {
            let out = run(command, &chain, opts);
            (Some(out.bundle), out.failure)
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| CliError::Input(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Input(format!("cannot start worker threads: {e}")))
}

fn batch(command: Command, path: &Path, params: &IsotonicParams, opts: &Options) -> Result<BatchReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let entries = thread_pool()?.install(|| {
        lines
            .par_iter()
            .map(|&(line, chain)| {
                let (report, failure) = run_text(command, chain, params, opts);
                BatchEntry {
                    line,
                    chain: chain.to_string(),
                    exit_code: failure.as_ref().map_or(exit::OK, CliError::exit_code),
                    report,
                    error: failure.as_ref().map(CliError::diagnostic),
                }
            })
            .collect()
    });
    Ok(BatchReport { format_version: FORMAT_VERSION, entries })
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    let io = |source, path: &Path| CliError::Io { path: path.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(|e| io(e, dir))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| io(e, &path))
}

/// Writes `contents` to `dir/name`, or to stdout without a directory.
fn emit(out: &Option<PathBuf>, name: &str, contents: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(dir) => write_file(dir, name, contents),
        None => stdout
            .write_all(contents.as_bytes())
            .map_err(|source| CliError::Io { path: "stdout".to_string(), source }),
    }
}

fn execute_args(command: Command, args: Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let params = parse_params(&args.omega, &args.a)?;
    let opts = options(&args)?;
    if let Some(path) = &args.batch {
        if args.format == Format::Csv {
            return Err(CliError::Input("plot data is per chain; --batch writes JSON".to_string()));
        }
        let report = batch(command, path, &params, &opts)?;
        emit(&args.out, "batch.json", &to_json(&report), stdout)?;
        return Ok(report.entries.iter().map(|e| e.exit_code).max().unwrap_or(exit::OK));
    }
    let chain = parse_chain(args.chain.as_deref().unwrap_or_default(), &params)?;
    let outcome = run(command, &chain, &opts);
    if let Some(failure) = outcome.failure {
        if args.out.is_some() {
            emit(&args.out, "report.json", &to_json(&outcome.bundle), stdout)?;
        }
        return Err(failure);
    }
    let json = to_json(&outcome.bundle);
    match args.format {
        Format::Json => emit(&args.out, "report.json", &json, stdout)?,
        Format::Csv => {
            let grid = opts.grid.clone().unwrap_or_else(|| GridSpec {
                points: PLOT_POINTS,
                ..GridSpec::default_for(&params, opts.levels as usize)
            });
            let csv = plot_csv(&chain, opts.levels, &grid)?;
            if args.out.is_some() {
                emit(&args.out, "report.json", &json, stdout)?;
            }
            emit(&args.out, "plot.csv", &csv, stdout)?;
        }
    }
    Ok(exit::OK)
}

fn report_error(e: &CliError, stderr: &mut dyn Write) -> i32 {
    let envelope = DiagnosticEnvelope { error: e.diagnostic() };
    let line = serde_json::to_string(&envelope).expect("diagnostics serialize");
    let _ = writeln!(stderr, "{line}");
    e.exit_code()
}

/// Runs the command line and returns the process exit code.
pub fn execute<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return exit::OK;
            }
            let rendered = e.render().to_string();
            let message = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            return report_error(&CliError::Input(message.trim_start_matches("error: ").to_string()), stderr);
        }
    };
    let (command, args) = cli.command.split();
    match execute_args(command, args, stdout) {
        Ok(code) => code,
        Err(e) => report_error(&e, stderr),
    }
}
