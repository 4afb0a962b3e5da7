//! `phasecov` command-line front end: sweeps, trade-off reports and self-verification.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use phasecov::harness::{
    default_phis, read_csv, run_verification, sweep_ideal, sweep_pulse, tradeoff_report, uniform_alphas, write_records,
    write_tradeoff, DEFAULT_ALPHA_POINTS,
};
use phasecov::{Error, SweepConfig64, SweepRecord64};

const EXIT_INVALID: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "phasecov", version, about = "Asymmetric phase-covariant cloning simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gate-level sweep over alpha and phi.
    IdealSweep {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// NMR pulse-level sweep, optionally with a systematic pulse-angle error.
    PulseSweep {
        #[command(flatten)]
        grid: GridArgs,
        /// Relative pulse-angle error applied to the cloning sequences.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        epsilon: f64,
        /// Scalar coupling in Hz.
        #[arg(long, default_value_t = phasecov::pulsesim::DEFAULT_J_HZ)]
        j: f64,
        /// Thermal polarization ratio of qubit a to qubit b.
        #[arg(long, default_value_t = phasecov::pulsesim::CALIBRATED_THERMAL_RATIO)]
        ratio: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Append circle residual and universal-frontier columns to a sweep CSV.
    Tradeoff {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant suite; exits 2 if any check fails.
    Verify,
}

#[derive(Args)]
struct GridArgs {
    /// Number of uniform points on [0, pi], or a comma-separated list of radians.
    #[arg(long, value_parser = parse_alphas)]
    alphas: Option<AlphaSpec>,
    /// Comma-separated input phases in radians.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    phis: Option<AngleList>,
}

/// Comma-separated radians; a newtype so clap treats it as one value.
#[derive(Clone, Debug)]
struct AngleList(Vec<f64>);

#[derive(Clone, Debug)]
enum AlphaSpec {
    Count(usize),
    List(Vec<f64>),
}

fn parse_list(s: &str) -> Result<AngleList, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("not a number: {t:?}")))
        .collect::<Result<_, _>>()
        .map(AngleList)
}

fn parse_alphas(s: &str) -> Result<AlphaSpec, String> {
    match s.trim().parse::<usize>() {
        Ok(n) => Ok(AlphaSpec::Count(n)),
        Err(_) => parse_list(s).map(|l| AlphaSpec::List(l.0)),
    }
}

impl GridArgs {
    fn config(&self) -> phasecov::Result<SweepConfig64> {
        let alpha_grid = match &self.alphas {
            None => uniform_alphas(DEFAULT_ALPHA_POINTS)?,
            Some(AlphaSpec::Count(n)) => uniform_alphas(*n)?,
            Some(AlphaSpec::List(list)) => list.clone(),
        };
        let phi_set = self.phis.as_ref().map_or_else(default_phis, |l| l.0.clone());
        Ok(SweepConfig64 { alpha_grid, phi_set, ..Default::default() })
    }
}

/// Opens `out` (or stdout) and hands the writer plus a label for error messages to `body`.
fn with_output(
    out: Option<&Path>,
    body: impl FnOnce(&mut dyn Write, &Path) -> phasecov::Result<()>,
) -> phasecov::Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
            let mut writer = BufWriter::new(file);
            body(&mut writer, path)?;
            writer.flush().map_err(|source| Error::Io { path: path.to_path_buf(), source })
        }
        None => body(&mut io::stdout().lock(), Path::new("<stdout>")),
    }
}

fn emit(records: &[SweepRecord64], out: Option<&Path>) -> phasecov::Result<()> {
    with_output(out, |w, label| write_records(records, w, label))
}

fn run(command: Command) -> phasecov::Result<ExitCode> {
    match command {
        Command::IdealSweep { grid, out } => emit(&sweep_ideal(&grid.config()?)?, out.as_deref())?,
        Command::PulseSweep { grid, epsilon, j, ratio, out } => {
            let config = SweepConfig64 { epsilon, j_coupling: j, thermal_ratio: ratio, ..grid.config()? };
            emit(&sweep_pulse(&config)?, out.as_deref())?
        }
        Command::Tradeoff { input, out } => {
            let records = read_csv(&input)?;
            let report = tradeoff_report(&records)?;
            with_output(out.as_deref(), |w, label| write_tradeoff(&records, &report, w, label))?;
            eprintln!("max |residual| = {:.3e}", report.max_abs_residual);
        }
        Command::Verify => {
            let report = run_verification()?;
            for check in &report.checks {
                println!("[{}] {}: {}", if check.passed { "PASS" } else { "FAIL" }, check.name, check.detail);
            }
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(EXIT_INVALID) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Io { .. } => EXIT_IO,
                Error::InvalidArgument(_) | Error::Format { .. } => EXIT_INVALID,
            })
        }
    }
}
