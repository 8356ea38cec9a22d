use std::process::ExitCode;

use clap::Parser;
use symldpc_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match symldpc_cli::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
