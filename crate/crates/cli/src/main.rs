//! `cozero`: spectra, oracle checks and exports for Γ'(Z_n).
//!
//! Exit codes: 0 ok, 1 error or failed check, 2 degenerate input (prime n,
//! or a prime power for `spectrum`), 3 vertex cap exceeded, 64 usage.

mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use commands::{Failure, Outcome, EXIT_ERROR, EXIT_OK, EXIT_USAGE};
use config::{validate_n, validate_range, Cli, Command, RunConfig, Target};

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let cfg = RunConfig::from_args(&cli.global).map_err(Failure::usage)?;
    match cli.command {
        Command::Spectrum { n } => commands::spectrum(validate_n(n).map_err(Failure::usage)?, &cfg),
        Command::Verify { n, check_definition } => {
            commands::verify(validate_n(n).map_err(Failure::usage)?, check_definition, &cfg)
        }
        Command::Scan { lo, hi, filter } => {
            commands::scan(validate_range(lo, hi).map_err(Failure::usage)?, filter, &cfg)
        }
        Command::Structure { n, full } => commands::structure(validate_n(n).map_err(Failure::usage)?, full, &cfg),
        Command::Integrality { lo, hi, filter } => {
            let target = match hi {
                None => Target::Single(validate_n(lo).map_err(Failure::usage)?),
                Some(hi) => validate_range(lo, hi).map_err(Failure::usage)?,
            };
            commands::integrality(target, filter, &cfg)
        }
    }
}

fn emit(body: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let out = cli.global.out.clone();
    match run(cli) {
        Ok(outcome) => {
            if let Some(notice) = &outcome.notice {
                eprintln!("{notice}");
            }
            if let Err(e) = emit(&outcome.body, out.as_deref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(EXIT_ERROR);
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            if failure.code == EXIT_USAGE {
                eprintln!("\nFor more information, try '--help'.");
            }
            ExitCode::from(failure.code)
        }
    }
}
