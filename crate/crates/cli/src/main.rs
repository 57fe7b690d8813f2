use std::process::ExitCode;

use clap::Parser;
use qim_cli::{run, Cli, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let cfg = RunConfig::from(Cli::parse());
    let outcome = run(&cfg);
    if let Some(e) = &outcome.error {
        eprintln!("error: {e}");
    }
    let written = match &cfg.out_path {
        Some(path) => std::fs::write(path, &outcome.output),
        None => {
            print!("{}", outcome.output);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.status as u8)
}
