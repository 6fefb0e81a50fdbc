//! `arcsine-reset`: evaluate, simulate, validate, and fit the arcsine-law
//! functionals of Brownian motion under Poissonian resetting.
//!
//! Exit codes: 0 success, 2 usage, 3 numeric convergence failure,
//! 4 validation threshold exceeded, 5 fit divergence.

mod args;
mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    // clap exits 2 by itself on flag parse errors, 0 on --help/--version.
    let cli = args::Cli::parse();
    match commands::dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
