//! Command-line front end for `qes-core`.
//!
//! Exit status: 0 on success, 1 when a solver fails, 2 for invalid usage.

pub mod args;
pub mod diagnostics;
pub mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qes_core::potentials::YukawaPotential;
use qes_core::spectra::{self, solve_radial, SolverOptions, DEFAULT_TOLERANCE, TABLE_DELTAS};
use qes_core::susy::{solve_susy_coulomb_point, susy_coulomb_energy, DEFAULT_SUSY_GUESS};
use qes_core::transform::{map_space, map_system, QuantumNumbers};

use crate::args::Cli;
pub use crate::output::{Cell, OutputFormat, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Usage(String),
    #[error(transparent)]
    Solver(#[from] qes_core::Error),
    #[error("i/o failure: {0}")]
    Io(#[from] io::Error),
    #[error("csv output failure: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output failure: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for inputs outside the model's domain, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_)
            | CliError::Solver(qes_core::Error::InvalidArgument(_) | qes_core::Error::Domain { .. }) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Table1,
    Table2,
    Solve,
    Map,
    SusyPoint,
    SusyCheck,
}

/// One validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub delta_list: Vec<f64>,
    pub dimension: u32,
    pub ell: u32,
    pub dims: Vec<u32>,
    pub ells: Vec<u32>,
    pub states: usize,
    pub tolerance: f64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub e2: f64,
    pub lambda: u32,
    pub source_energy: Option<f64>,
    pub initial_guess: (f64, f64),
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Table1,
            delta_list: TABLE_DELTAS.to_vec(),
            dimension: 3,
            ell: 0,
            dims: spectra::TABLE1_DIMENSIONS.to_vec(),
            ells: spectra::TABLE_ELLS.to_vec(),
            states: 4,
            tolerance: DEFAULT_TOLERANCE,
            output_format: OutputFormat::Csv,
            output_path: None,
            e2: 1.0,
            lambda: 0,
            source_energy: None,
            initial_guess: DEFAULT_SUSY_GUESS,
        }
    }
}

pub const MAX_STATES: usize = 8;

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return usage(format!("tolerance must be positive, got {}", self.tolerance));
        }
        if !(1..=MAX_STATES).contains(&self.states) {
            return usage(format!("states must lie in 1..={MAX_STATES}, got {}", self.states));
        }
        if !(self.e2 > 0.0) || !self.e2.is_finite() {
            return usage(format!("e2 must be positive, got {}", self.e2));
        }
        if self.delta_list.iter().any(|d| !d.is_finite() || *d < 0.0) {
            return usage("screening values must be finite and non-negative".into());
        }
        match self.command {
            Command::Table1 | Command::Table2 if self.delta_list.is_empty() => {
                usage("table commands need at least one screening value".into())
            }
            Command::Table1 if self.dims.is_empty() || self.ells.is_empty() => {
                usage("table1 needs at least one dimension and one ℓ".into())
            }
            Command::Table1 if self.dims.iter().any(|&n| n < 2) => usage("dimensions must be at least 2".into()),
            Command::Solve | Command::Map if self.dimension < 2 => {
                usage(format!("dimension must be at least 2, got {}", self.dimension))
            }
            Command::Map if self.lambda > 1 => usage(format!("lambda must be 0 or 1, got {}", self.lambda)),
            _ => Ok(()),
        }
    }
}

fn fixed(v: f64) -> Cell {
    Cell::Fixed(v, 6)
}

fn delta_cell(v: f64) -> Cell {
    Cell::Fixed(v, 3)
}

/// Executes a validated configuration.
pub fn run(config: &RunConfig) -> Result<Table, CliError> {
    config.validate()?;
    match config.command {
        Command::Table1 => run_table1(config),
        Command::Table2 => run_table2(config),
        Command::Solve => run_solve(config),
        Command::Map => run_map(config),
        Command::SusyPoint => run_susy_point(config),
        Command::SusyCheck => diagnostics::susy_check(config.e2, config.initial_guess),
    }
}

fn run_table1(config: &RunConfig) -> Result<Table, CliError> {
    let records = spectra::table1(
        &config.delta_list,
        &config.dims,
        &config.ells,
        config.states as u32 - 1,
        config.tolerance,
    )?;
    let mut table = Table::new(vec!["delta", "N", "ell", "n", "energy", "flag"]);
    for r in records {
        table.push(vec![
            delta_cell(r.delta),
            Cell::Int(r.dimension.into()),
            Cell::Int(r.ell.into()),
            Cell::Int(r.n.into()),
            fixed(r.energy),
            Cell::Text(r.flag.as_str().into()),
        ]);
    }
    Ok(table)
}

fn run_table2(config: &RunConfig) -> Result<Table, CliError> {
    let records = spectra::table2(&config.delta_list, config.tolerance)?;
    let mut table = Table::new(vec!["delta", "ell", "L", "E0_abs", "Ehat_mesh", "Ehat_exact", "abs_diff"]);
    for r in records {
        table.push(vec![
            delta_cell(r.delta),
            Cell::Int(r.ell.into()),
            Cell::Int(r.l.into()),
            fixed(r.e0_abs),
            fixed(r.e_hat_mesh),
            fixed(r.e_hat_exact),
            Cell::Sci(r.abs_diff, 2),
        ]);
    }
    Ok(table)
}

fn run_solve(config: &RunConfig) -> Result<Table, CliError> {
    let delta = config.delta_list[0];
    let potential = YukawaPotential::new(config.e2, delta)?.truncate();
    let q = QuantumNumbers::new(config.dimension, config.ell, 0)?;
    let opts = SolverOptions::coulombic(q.m_index(), config.states as u32 - 1, config.e2);
    let spectrum = solve_radial(config.dimension, config.ell, &potential, config.states, config.tolerance, &opts)?;
    if !spectrum.is_complete() {
        eprintln!(
            "warning: only {} of {} requested states are bound in the box",
            spectrum.energies.len(),
            config.states
        );
    }
    let mut table = Table::new(vec!["delta", "N", "ell", "n", "energy", "estimated_error", "flag"]);
    for (n, (e, report)) in spectrum.energies.iter().zip(&spectrum.reports).enumerate() {
        table.push(vec![
            delta_cell(delta),
            Cell::Int(config.dimension.into()),
            Cell::Int(config.ell.into()),
            Cell::Int(n as i64),
            fixed(*e),
            Cell::Sci(report.estimated_error, 2),
            Cell::Text(spectra::EnergyFlag::of(*e).as_str().into()),
        ]);
    }
    Ok(table)
}

fn run_map(config: &RunConfig) -> Result<Table, CliError> {
    let delta = config.delta_list[0];
    let series = YukawaPotential::new(config.e2, delta)?.truncate();
    let q = QuantumNumbers::new(config.dimension, config.ell, 0)?;
    let e0 = match config.source_energy {
        Some(e) => e,
        None => {
            let opts = SolverOptions::coulombic(q.m_index(), 0, config.e2);
            let s = solve_radial(config.dimension, config.ell, &series, 1, config.tolerance, &opts)?;
            *s.energies.first().ok_or_else(|| {
                CliError::Solver(qes_core::Error::Convergence {
                    context: "no bound source state in the box".into(),
                    estimate: f64::NAN,
                    estimated_error: f64::NAN,
                })
            })?
        }
    };
    let system = map_system(&series, e0)?;
    let space = map_space(&q, config.lambda)?;
    let o = system.oscillator;
    let mut table = Table::new(vec![
        "delta", "N", "ell", "lambda", "N_prime", "L", "M_prime", "E0", "alpha", "c2", "c4", "c6", "c8", "c10",
        "Ehat_exact",
    ]);
    table.push(vec![
        delta_cell(delta),
        Cell::Int(config.dimension.into()),
        Cell::Int(config.ell.into()),
        Cell::Int(config.lambda.into()),
        Cell::Int(space.n_prime),
        Cell::Int(space.l),
        Cell::Int(space.m_prime),
        fixed(e0),
        fixed(system.alpha),
        Cell::Sci(o.c2, 9),
        Cell::Sci(o.c4, 9),
        Cell::Sci(o.c6, 9),
        Cell::Sci(o.c8, 9),
        Cell::Sci(o.c10, 9),
        fixed(system.e_hat_exact),
    ]);
    Ok(table)
}

fn run_susy_point(config: &RunConfig) -> Result<Table, CliError> {
    let point = solve_susy_coulomb_point(config.e2, config.initial_guess)?;
    let series = YukawaPotential::new(config.e2, point.delta)?.truncate();
    let energy = susy_coulomb_energy(&series, point.m)?;
    let mut table = Table::new(vec!["e2", "M", "delta", "E0", "residual_1", "residual_2", "iterations"]);
    table.push(vec![
        Cell::Fixed(config.e2, 6),
        Cell::Fixed(point.m, 12),
        Cell::Fixed(point.delta, 12),
        Cell::Fixed(energy, 12),
        Cell::Sci(point.residuals.0, 3),
        Cell::Sci(point.residuals.1, 3),
        Cell::Int(point.iterations as i64),
    ]);
    Ok(table)
}

/// Writes `table` to the configured destination.
pub fn emit(config: &RunConfig, table: &Table) -> Result<(), CliError> {
    match &config.output_path {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            table.write(config.output_format, &mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            table.write(config.output_format, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

/// Parses, runs and reports; the binary's whole body.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    let config = RunConfig::from(cli);
    match run(&config).and_then(|table| emit(&config, &table)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
