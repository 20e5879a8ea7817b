//! `statevol` command-line front end.

mod commands;
mod format;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use statevol::ScalarField;

#[derive(Parser, Debug)]
#[command(name = "statevol", version, about = "Volumes of real, complex and quaternionic quantum state spaces")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Significant digits for numbers in text and CSV output.
    #[arg(long, default_value_t = 10, global = true, value_parser = clap::value_parser!(u32).range(1..=17))]
    pub digits: u32,
    /// Number of Monte Carlo streams and worker threads. Results are
    /// reproducible for a fixed (seed, threads) pair.
    #[arg(long, env = "STATEVOL_THREADS", global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Exit with status 4 when any reported volume is infinite.
    #[arg(long, global = true)]
    pub require_finite: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldArg {
    Real,
    Complex,
    Quaternion,
}

impl From<FieldArg> for ScalarField {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Real => ScalarField::Real,
            FieldArg::Complex => ScalarField::Complex,
            FieldArg::Quaternion => ScalarField::Quaternion,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureArg {
    /// Point mass at 1/2.
    DeltaHalf,
    Uniform,
    Arcsine,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct QubitSource {
    /// Monotone metric id: sld, rld, km, geo, wy, lm2, lm3, alpha:A, beta:B, gam:G.
    #[arg(long)]
    pub metric: Option<String>,
    /// Pull-back metric id: identity, log, power:P.
    #[arg(long)]
    pub pullback: Option<String>,
    /// Symmetric measure on [0, 1] defining the metric through the kernel representation.
    #[arg(long, value_enum)]
    pub measure: Option<MeasureArg>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact Lebesgue volume of the n × n state space.
    Volume {
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(long)]
        n: usize,
    },
    /// Expectation of det^alpha over uniformly distributed states.
    ExpectedDet {
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
    },
    /// Draw uniformly distributed states.
    Sample {
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Monte Carlo estimate of a Lebesgue or metric volume.
    Estimate {
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, conflicts_with = "pullback")]
        metric: Option<String>,
        #[arg(long)]
        pullback: Option<String>,
    },
    /// Qubit volume of a monotone or pull-back metric by quadrature.
    Qubit {
        #[command(flatten)]
        source: QubitSource,
        #[arg(long, value_enum, default_value_t = FieldArg::Complex)]
        field: FieldArg,
    },
    /// Finite/infinite verdict with the endpoint exponent evidence.
    Classify {
        #[command(flatten)]
        source: QubitSource,
        #[arg(long, value_enum, default_value_t = FieldArg::Complex)]
        field: FieldArg,
    },
    /// Qubit volumes of the whole monotone catalog against reference values.
    Table {
        /// Report the volume of each finite-volume function's transpose instead.
        #[arg(long)]
        transpose: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let streams = cli.global.threads.unwrap_or(statevol::sampling::DEFAULT_STREAMS as u32) as usize;
    if let Some(t) = cli.global.threads {
        // The global pool can only be configured once; later calls are no-ops.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global();
    }
    match commands::run(&cli, streams) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("statevol: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
