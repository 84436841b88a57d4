use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use threeterm_cli::commands::{self, Output};
use threeterm_cli::CliError;

/// Ptolemy, Casey, lambda-length and Plücker forms of the 3-term relation.
#[derive(Parser)]
#[command(name = "threeterm", version)]
struct Cli {
    /// Relative tolerance for relation checks.
    #[arg(long, global = true, default_value = "1e-10")]
    tol: f64,

    /// Emit JSON instead of a table.
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,

    /// Emit a human-readable table (default).
    #[arg(long, global = true)]
    table: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chords, bitangents, lambda lengths and minors of a four-circle configuration.
    Measure { config: PathBuf },
    /// Torus element taking one six-tuple to another.
    Rescale { a: PathBuf, b: PathBuf },
    /// Plücker minors and matrix reconstruction.
    Plucker {
        #[command(subcommand)]
        action: PluckerCommand,
    },
    /// Cross-ratio of four projective points.
    Crossratio { points: PathBuf },
    /// SVG figure of a four-circle configuration.
    Render {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PluckerCommand {
    /// Six minors of a 2×4 matrix.
    Minors { matrix: PathBuf },
    /// A 2×4 matrix whose minors are the given six-tuple.
    Reconstruct { tuple: PathBuf },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(CliError::Parse(format!(
            "--tol must be positive, got {}",
            cli.tol
        )));
    }
    match cli.command {
        Command::Measure { config } => commands::measure(&config, cli.tol, cli.json),
        Command::Rescale { a, b } => commands::rescale(&a, &b, cli.tol, cli.json),
        Command::Plucker { action } => match action {
            PluckerCommand::Minors { matrix } => commands::plucker_minors(&matrix, cli.json),
            PluckerCommand::Reconstruct { tuple } => {
                commands::plucker_reconstruct(&tuple, cli.tol, cli.json)
            }
        },
        Command::Crossratio { points } => commands::crossratio(&points, cli.json),
        Command::Render { config, out } => {
            let svg = commands::render(&config)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, svg).map_err(|e| {
                        CliError::Parse(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(Output {
                        stdout: String::new(),
                        code: 0,
                    })
                }
                None => Ok(Output {
                    stdout: svg,
                    code: 0,
                }),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
