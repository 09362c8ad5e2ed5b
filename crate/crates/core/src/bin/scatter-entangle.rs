use std::f64::consts::FRAC_PI_2;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scatter_entangle::bell::{critical_angle, DEFAULT_TOL};
use scatter_entangle::scan::{
    self, Interaction, OutputFormat, ScanConfig, ScanRecord, DEFAULT_STEPS, DEFAULT_THETA_MIN,
};
use scatter_entangle::{Error, ExchangeStatistics};

#[derive(Parser)]
#[command(
    name = "scatter-entangle",
    version,
    about = "Spin entanglement and Bell violation from spin-independent scattering"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate amplitudes, entropy and F over a range of angles.
    Scan(ScanArgs),
    /// Evaluate a single angle.
    Point(PointArgs),
    /// Locate the angle where F crosses 1.
    Critical(CriticalArgs),
}

#[derive(Args)]
struct Common {
    /// `coulomb` or `constant:<f_plus>`
    #[arg(long, default_value = "coulomb")]
    interaction: Interaction,
    /// `fermion` or `boson`
    #[arg(long, default_value = "fermion")]
    statistics: ExchangeStatistics,
    /// `csv` or `json`
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Output file (standard output when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = DEFAULT_THETA_MIN)]
    theta_min: f64,
    #[arg(long, default_value_t = FRAC_PI_2)]
    theta_max: f64,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct PointArgs {
    /// Scattering angle in radians, in (0, pi/2].
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct CriticalArgs {
    #[arg(long, default_value = "coulomb")]
    interaction: Interaction,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidConfig(_) | Error::AngleOutOfRange(_) => Self::Usage(e.to_string()),
            other => Self::Runtime(other.to_string()),
        }
    }
}

fn emit(records: &[ScanRecord], common: &Common) -> Result<(), Failure> {
    let result = match &common.output {
        Some(path) => File::create(path)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                scan::write_records(records, common.format, &mut w)?;
                w.flush()
            })
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            scan::write_records(records, common.format, &mut w)
                .and_then(|_| w.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    };
    result.map_err(Failure::Runtime)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Scan(args) => {
            let config = ScanConfig {
                theta_min: args.theta_min,
                theta_max: args.theta_max,
                steps: args.steps,
                interaction: args.common.interaction,
                statistics: args.common.statistics,
            };
            let records = scan::run_scan(&config)?;
            emit(&records, &args.common)
        }
        Command::Point(args) => {
            let record = scan::point(args.theta, args.common.interaction, args.common.statistics)?;
            emit(&[record], &args.common)
        }
        Command::Critical(args) => {
            let provider = args.interaction.provider()?;
            match critical_angle(provider.as_ref(), args.tol)? {
                Some(theta) => println!(
                    "theta_c = {:.12} rad ({:.9} deg)",
                    theta.radians(),
                    theta.degrees()
                ),
                None => println!("no crossing"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
