//! Command-line frontend: `verify`, `correction`, `scan`, `bounds`,
//! `moment`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/config error,
//! 3 domain error (divergent formula or moment).

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub mod commands;
pub mod config;
pub mod output;

use commands::{cmd_bounds, cmd_correction, cmd_moment, cmd_scan, cmd_verify, CorruptMode};
use config::{FileConfig, NcArgs, OutputFormat, ThetaRouteArg, Units};
use ncphase_core::bounds::TRANSITION_REL_ACCURACY;
use ncphase_core::suite::DEFAULT_SEED;

/// An error carrying its exit code (2 usage/config, 3 domain).
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub exit: u8,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { message, exit: 2 }
    }

    pub fn domain(message: String) -> Self {
        CliError { message, exit: 3 }
    }
}

#[derive(Parser)]
#[command(
    name = "ncphase",
    version,
    about = "Rotationally invariant noncommutative phase space: algebra verification, hydrogen energy corrections and parameter bounds"
)]
pub struct Cli {
    /// Flat JSON config file; flags override file values (env: NCPHASE_CONFIG)
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Verify every commutation relation, invariance property and Jacobi
    /// identity of the algebra (exit 1 on any failure)
    Verify {
        /// Seed of the randomized Jacobi sweep
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, hide = true, value_enum)]
        corrupt_representation: Option<CorruptMode>,
    },
    /// Energy correction of one hydrogen level
    Correction {
        /// Principal quantum number
        #[arg(long)]
        n: u32,
        /// Orbital quantum number
        #[arg(long)]
        l: u32,
        /// Report SI values alongside Hartree
        #[arg(long, value_enum)]
        units: Option<Units>,
        #[command(flatten)]
        nc: NcArgs,
    },
    /// Tabulate level corrections up to n-max
    Scan {
        #[arg(long = "n-max")]
        n_max: u32,
        #[command(flatten)]
        nc: NcArgs,
    },
    /// Upper bounds on the noncommutativity parameters from the 1s-2s
    /// transition accuracy
    Bounds {
        /// Relative measurement accuracy (default: the 1s-2s reference)
        #[arg(long)]
        accuracy: Option<f64>,
        /// Error-budget fraction assigned to each parameter
        #[arg(long)]
        budget_fraction: Option<f64>,
        /// Which theta transition-shift coefficient to invert
        #[arg(long, value_enum)]
        theta_route: Option<ThetaRouteArg>,
    },
    /// Radial moment <r^s>: closed form against the quadrature oracle
    Moment {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, allow_negative_numbers = true)]
        s: i32,
        /// Relative tolerance of the quadrature oracle
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

pub fn execute(cli: Cli) -> Result<commands::CommandOutcome, CliError> {
    let file = FileConfig::resolve(cli.config.as_ref())?;
    let format = cli.output.or(file.output).unwrap_or_default();
    match cli.command {
        Command::Verify {
            seed,
            corrupt_representation,
        } => {
            let seed = seed.or(file.seed).unwrap_or(DEFAULT_SEED);
            cmd_verify(seed, corrupt_representation, format)
        }
        Command::Correction { n, l, units, nc } => {
            let nc = config::resolve_nc_params(&file, &nc)?;
            let units = units.or(file.units).unwrap_or_default();
            cmd_correction(n, l, &nc, units, &file.constants(), format)
        }
        Command::Scan { n_max, nc } => {
            let nc = config::resolve_nc_params(&file, &nc)?;
            cmd_scan(n_max, &nc, format)
        }
        Command::Bounds {
            accuracy,
            budget_fraction,
            theta_route,
        } => {
            let accuracy = accuracy
                .or(file.accuracy)
                .unwrap_or(TRANSITION_REL_ACCURACY);
            let budget = budget_fraction.or(file.budget_fraction).unwrap_or(0.5);
            let route = theta_route
                .or(file.theta_route)
                .map(Into::into)
                .unwrap_or_default();
            cmd_bounds(accuracy, budget, route, &file.constants(), format)
        }
        Command::Moment { n, l, s, tol } => cmd_moment(n, l, s, tol, format),
    }
}

/// Parse, execute, print; returns the process exit code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.exit
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.exit
        }
    }
}
