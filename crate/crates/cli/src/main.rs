//! Command-line front end for the `blockgap` library.
//!
//! Exit status is 0 on success, 2 when the input or arguments cannot be
//! parsed, 3 when the input violates a hypothesis of the requested
//! computation and 1 when a verification reports failures.

mod args;
mod commands;
mod error;
mod output;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use blockgap::linalg::Tolerances;
use clap::Parser;

use args::{Cli, Command, GlobalArgs};
use error::{CliError, CliResult};

fn tolerances(g: &GlobalArgs) -> CliResult<Tolerances> {
    let positive = |x: f64| x > 0.0 && x.is_finite();
    if !positive(g.tol_psd) || g.tol_rank.is_some_and(|r| !positive(r)) {
        return Err(CliError::Argument("tolerances must be positive".into()));
    }
    Ok(Tolerances { rank: g.tol_rank, psd: g.tol_psd })
}

fn run(cli: &Cli) -> CliResult<()> {
    let tol = tolerances(&cli.global)?;
    let format = cli.global.format;
    let (out, failures) = match &cli.command {
        Command::Bounds(a) => (commands::bounds(a, tol)?, 0),
        Command::Stokes(a) => (commands::stokes(a, tol, format)?, 0),
        Command::Model { command } => commands::model(command)?,
        Command::Counterexamples(a) => (commands::counterexamples(a)?, 0),
    };
    let text = out.render(format)?;
    match &cli.global.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    if failures > 0 {
        return Err(CliError::Verification(failures));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
