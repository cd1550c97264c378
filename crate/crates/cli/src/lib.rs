//! Command-line front end for the ant-colony habitat simulator.

pub mod commands;
pub mod config;
pub mod gen;

pub use config::{Cli, Command};

use anyhow::Result;

pub fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run(args) => {
            let cfg = args.into_config()?;
            let summary = commands::run_experiment(&cfg)?;
            println!(
                "completed {} steps in {:.2}s; final gini {:.4}; output in {}",
                summary.steps,
                summary.wall.as_secs_f64(),
                summary.final_gini,
                cfg.out_dir.display()
            );
        }
        Command::Metrics(args) => {
            print!("{}", commands::metrics_report(&args)?);
        }
        Command::Gen(args) => {
            println!("{}", commands::generate(&args.shape)?);
        }
    }
    Ok(())
}
