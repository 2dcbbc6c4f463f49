use std::process::ExitCode;

use clap::Parser;
use eigenwell_cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::from_command(cli.command).and_then(|cfg| run(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("eigenwell: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
