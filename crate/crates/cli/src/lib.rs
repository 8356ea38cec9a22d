//! Command-line front end: build, analyze, simulate and export.

pub mod alist;
pub mod args;
pub mod commands;
pub mod output;

use std::process::ExitCode;

use anyhow::{Context, Result};

use crate::args::{Cli, Command};

pub fn run(cli: &Cli) -> Result<ExitCode> {
    if cli.dry_run {
        println!("{}", serde_json::to_string_pretty(cli)?);
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global().context("configuring worker threads")?;
    }
    match &cli.command {
        Command::Build(a) => commands::build(a),
        Command::Analyze(a) => commands::analyze(a),
        Command::Simulate(a) => commands::simulate(a, cli.threads),
        Command::Export(a) => commands::export(a),
    }
}
