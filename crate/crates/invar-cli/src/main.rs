use clap::{Parser, ValueEnum};
use invar_cli::{parse_problem, parse_rat, render, run, unsolved_rows, Format, RunOptions};
use invar_core::Error;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Enumerates all common invariant subspaces of a finite set of square
/// rational matrices, exactly.
#[derive(Parser)]
#[command(name = "invar", version)]
struct Args {
    /// Problem file: line-oriented matrix blocks or a JSON document
    file: PathBuf,

    /// Restrict the scan to a single dimension d (0 through n)
    #[arg(long, conflicts_with = "all")]
    dim: Option<usize>,

    /// Scan every dimension 0 through n (the default)
    #[arg(long)]
    all: bool,

    /// Override the shift, as an integer or fraction p/q
    #[arg(long)]
    shift: Option<String>,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Case-analysis depth budget for unresolved constraints
    #[arg(long, default_value_t = invar_core::DEFAULT_CASE_BUDGET)]
    max_params: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

/// Exit statuses: 0 success, 1 other failures, 2 unusable input or usage,
/// 3 non-rational spectrum.
const EXIT_INPUT: u8 = 2;
const EXIT_SPECTRUM: u8 = 3;
const EXIT_OTHER: u8 = 1;

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn execute(args: &Args) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| fail(EXIT_OTHER, format!("{}: {e}", args.file.display())))?;
    let problem = parse_problem(&text).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    let shift = match &args.shift {
        Some(s) => Some(parse_rat(s).map_err(|m| fail(EXIT_INPUT, format!("--shift: {m}")))?),
        None => None,
    };
    let opts = RunOptions {
        dim: args.dim,
        shift,
        case_budget: args.max_params,
    };

    let started = Instant::now();
    let report = run(&problem, &opts).map_err(|e| match e {
        Error::UnsupportedSpectrum { .. } => fail(EXIT_SPECTRUM, e.to_string()),
        Error::DegreeOutOfRange { .. } => fail(EXIT_INPUT, e.to_string()),
        other => fail(EXIT_OTHER, other.to_string()),
    })?;
    let elapsed = started.elapsed();

    let unsolved = unsolved_rows(&report);
    if unsolved > 0 {
        eprintln!(
            "warning: {unsolved} chart(s) left unsolved at case budget {}; \
             the enumeration may be incomplete",
            report.case_budget
        );
    }
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    print!("{}", render(&report, format));
    eprintln!("scan completed in {} ms", elapsed.as_millis());
    Ok(())
}
