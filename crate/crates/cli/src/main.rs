use antmap::Cli;
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    match antmap::execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
