//! `qgdf`: quiver Grassmannians Gr_{dim P}(P ⊕ I) from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal invariant
//! failure, 2 usage, 3 invalid input, 4 resource budget. Errors are written
//! to stderr as `{"error": kind, "message": text}`.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{
    CellsArgs, EmitArgs, GenocchiArgs, OracleArgs, OrbitsArgs, PoincareArgs, TangentArgs,
    VerifyArgs,
};
use output::{Format, Out};

#[derive(Parser, Debug)]
#[command(name = "qgdf", version, about = "Quiver Grassmannians of P ⊕ I for Dynkin quivers")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for parallel parts (default: all cores)
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Poincaré polynomial of a type-A configuration
    Poincare(PoincareArgs),
    /// Normalized median Genocchi numbers
    Genocchi(GenocchiArgs),
    /// Torus fixed points and attracting cells
    Cells(CellsArgs),
    /// G-orbits on a type-A configuration
    Orbits(OrbitsArgs),
    /// Brute-force point counts over F_q
    Oracle {
        #[command(subcommand)]
        action: OracleCommand,
    },
    /// Write the representation P ⊕ I as a rep file
    EmitRep(EmitArgs),
    /// Cross-check formula, cells, orbits and point counts
    Verify(VerifyArgs),
    /// Tangent space dimension at a subrepresentation
    Tangent(TangentArgs),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Count subrepresentations of a given dimension vector
    Count(OracleArgs),
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Budget(String),
    Mismatch(String),
    Internal(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Budget(_) => "budget",
            CliError::Mismatch(_) => "mismatch",
            CliError::Internal(_) => "internal",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Input(m)
            | CliError::Budget(m)
            | CliError::Mismatch(m)
            | CliError::Internal(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Mismatch(_) | CliError::Internal(_) => 1,
        }
    }
}

impl From<qgdf::Error> for CliError {
    fn from(e: qgdf::Error) -> Self {
        match e {
            qgdf::Error::Budget { .. } => CliError::Budget(e.to_string()),
            qgdf::Error::Invariant(_) => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("output: {}", e))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let mut out = Out::new(cli.format);
    let result = match &cli.command {
        Command::Poincare(a) => commands::poincare(a, &mut out),
        Command::Genocchi(a) => commands::genocchi(a, &mut out),
        Command::Cells(a) => commands::cells(a, &mut out),
        Command::Orbits(a) => commands::orbits(a, &mut out),
        Command::Oracle {
            action: OracleCommand::Count(a),
        } => commands::oracle_count(a, &mut out),
        Command::EmitRep(a) => commands::emit_rep(a, &mut out),
        Command::Verify(a) => commands::verify(a, &mut out),
        Command::Tangent(a) => commands::tangent(a, &mut out),
    };
    out.finish()?;
    result
}

fn report(err: &CliError) -> ExitCode {
    eprintln!("{}", json!({"error": err.kind(), "message": err.message()}));
    ExitCode::from(err.code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => return report(&CliError::Usage(e.to_string().trim().to_string())),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}
