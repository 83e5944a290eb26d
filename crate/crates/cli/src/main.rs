//! `mckay`: McKay quivers, character tables and coverings from the command line.
//!
//! Exit status is 0 on success, 1 when the computation reports an error
//! (its name is printed on stderr) and 2 for invalid usage.

mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
