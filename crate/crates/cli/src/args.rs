//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qes_core::spectra::{DEFAULT_TOLERANCE, TABLE1_DIMENSIONS, TABLE_DELTAS, TABLE_ELLS};
use qes_core::susy::DEFAULT_SUSY_GUESS;

use crate::output::OutputFormat;
use crate::{Command, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "qes", version, about = "Screened Coulomb and anharmonic oscillator spectra, mapping and SUSY ground states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Write to this file instead of stdout
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Energy tolerance (a.u.)
    #[arg(long, alias = "tolerance", default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Eigenvalues of the truncated screened Coulomb potential
    Table1 {
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = TABLE_DELTAS)]
        delta: Vec<f64>,
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = TABLE1_DIMENSIONS)]
        dims: Vec<u32>,
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = TABLE_ELLS)]
        ells: Vec<u32>,
        /// States per (δ, N, ℓ)
        #[arg(long, default_value_t = 4)]
        states: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Ground states of the mapped four-dimensional oscillator
    Table2 {
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = TABLE_DELTAS)]
        delta: Vec<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Lowest levels of one (N, ℓ) problem
    Solve {
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, default_value_t = 0.0)]
        delta: f64,
        #[arg(long, default_value_t = 4)]
        states: usize,
        #[arg(long, default_value_t = 1.0)]
        e2: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Oscillator obtained from a bound screened Coulomb state
    Map {
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        lambda: u32,
        #[arg(long, default_value_t = 1.0)]
        e2: f64,
        /// Source energy; solved for when omitted
        #[arg(long, allow_negative_numbers = true)]
        e0: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Parameter point where the closed-form state is exact
    SusyPoint {
        #[arg(long, default_value_t = 1.0)]
        e2: f64,
        #[arg(long, default_value_t = DEFAULT_SUSY_GUESS.0)]
        m0: f64,
        #[arg(long, default_value_t = DEFAULT_SUSY_GUESS.1)]
        delta0: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Partner-potential and eigenfunction diagnostics at the SUSY point
    SusyCheck {
        #[arg(long, default_value_t = 1.0)]
        e2: f64,
        #[arg(long, default_value_t = DEFAULT_SUSY_GUESS.0)]
        m0: f64,
        #[arg(long, default_value_t = DEFAULT_SUSY_GUESS.1)]
        delta0: f64,
        #[command(flatten)]
        common: Common,
    },
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let mut config = RunConfig::default();
        let common = match cli.command {
            CliCommand::Table1 { delta, dims, ells, states, common } => {
                config.command = Command::Table1;
                config.delta_list = delta;
                config.dims = dims;
                config.ells = ells;
                config.states = states;
                common
            }
            CliCommand::Table2 { delta, common } => {
                config.command = Command::Table2;
                config.delta_list = delta;
                common
            }
            CliCommand::Solve { dim, ell, delta, states, e2, common } => {
                config.command = Command::Solve;
                config.dimension = dim;
                config.ell = ell;
                config.delta_list = vec![delta];
                config.states = states;
                config.e2 = e2;
                common
            }
            CliCommand::Map { dim, ell, delta, lambda, e2, e0, common } => {
                config.command = Command::Map;
                config.dimension = dim;
                config.ell = ell;
                config.delta_list = vec![delta];
                config.lambda = lambda;
                config.e2 = e2;
                config.source_energy = e0;
                common
            }
            CliCommand::SusyPoint { e2, m0, delta0, common } => {
                config.command = Command::SusyPoint;
                config.e2 = e2;
                config.initial_guess = (m0, delta0);
                common
            }
            CliCommand::SusyCheck { e2, m0, delta0, common } => {
                config.command = Command::SusyCheck;
                config.e2 = e2;
                config.initial_guess = (m0, delta0);
                common
            }
        };
        config.output_format = common.format;
        config.output_path = common.output;
        config.tolerance = common.tol;
        config
    }
}
