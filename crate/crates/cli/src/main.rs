//! `ugomp`: point evaluation, CSV curves, sampling and a self-check report
//! for the unit-Gompertz distribution.

#![allow(clippy::neg_cmp_op_on_partial_ord)]
mod curve;
mod eval;
mod numfmt;
mod verify;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ugomp", version, about = "Unit-Gompertz distribution toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity and print it with 15 significant digits
    Eval(eval::EvalArgs),
    /// Tabulate a function of x on a grid as a two-column CSV
    Curve(curve::CurveArgs),
    /// Draw a reproducible sample as a one-column CSV
    Sample(curve::SampleArgs),
    /// Re-run the corrected shape, reliability and ordering results
    VerifyPaper(verify::VerifyArgs),
}

#[derive(Args, Clone, Copy)]
pub struct ParamArgs {
    /// Shape parameter α > 0
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Scale parameter β > 0
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad parameter, point or flag combination (exit 2).
    Domain(String),
    /// At least one verification check failed (exit 3).
    Verification(usize),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(m) => write!(f, "{m}"),
            CliError::Verification(n) => write!(f, "{n} check(s) failed"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<unit_gompertz::Error> for CliError {
    fn from(e: unit_gompertz::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

/// Opens `path` for writing, or standard output when no path is given.
pub fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval(args) => {
            let v = eval::run(&args)?;
            println!("{}", numfmt::g15(v));
            Ok(())
        }
        Command::Curve(args) => curve::run_curve(&args),
        Command::Sample(args) => curve::run_sample(&args),
        Command::VerifyPaper(args) => verify::run(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ugomp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
