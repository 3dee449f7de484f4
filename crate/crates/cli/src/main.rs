mod args;
mod commands;
mod input;
mod report;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::Status;

/// Caps the worker pool from `TNNFLAG_THREADS`.
fn init_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("TNNFLAG_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow::anyhow!("TNNFLAG_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let result = init_threads().and_then(|()| commands::run(cli));
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
