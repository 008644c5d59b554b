mod cli;
mod commands;
mod error;

use std::io::Write;

use clap::Parser;

use cli::{Cli, Command};
use error::CliError;

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => {}
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("devmatch: {e}");
            }
            std::process::exit(e.exit_code());
        }
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Match {
            profile,
            plan,
            format,
            catalog,
        } => {
            let out = commands::run_match(
                profile,
                plan.as_deref(),
                *format,
                catalog.catalog.as_deref(),
            )?;
            emit(&out);
            Ok(())
        }
        Command::Validate {
            plan,
            profile,
            format,
            catalog,
        } => {
            let (out, feasible) =
                commands::run_validate(plan, profile, *format, catalog.catalog.as_deref())?;
            emit(&out);
            if feasible {
                Ok(())
            } else {
                Err(commands::infeasible())
            }
        }
        Command::Catalog { action, catalog } => {
            emit(&commands::run_catalog(action, catalog.catalog.as_deref())?);
            Ok(())
        }
        Command::Serve {
            port,
            host,
            cors,
            catalog,
        } => commands::run_serve(*host, *port, *cors, catalog.catalog.as_deref()),
    }
}
