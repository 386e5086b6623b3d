//! `hyperwave` command-line front end.
//!
//! Exit status: 0 on success, 1 when a requested check fails, 2 for invalid
//! arguments, 3 for I/O errors.

mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::Parser;

use commands::Failure;
use config::{Cli, RunConfig, SEED_ENV};

const EXIT_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::from_cli(cli, std::env::var(SEED_ENV).ok()) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = match commands::run(&cfg) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{}: check failed: {msg}", cfg.command.name());
            return ExitCode::from(EXIT_CHECK);
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_IO);
        }
    };
    if let Err(e) = outcome.document.emit(cfg.output.as_deref()) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(EXIT_IO);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK)
    }
}
