mod args;
mod commands;
mod config;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Exit status when a check fails its contract.
const CHECK_FAILED: u8 = 1;
/// Exit status for malformed input or bad usage (matches clap's own).
const USAGE: u8 = 2;

fn thread_count(cli: &Cli) -> anyhow::Result<Option<usize>> {
    if let Some(n) = cli.threads {
        return Ok(Some(n));
    }
    match std::env::var("SPINGEO_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| anyhow::anyhow!("SPINGEO_THREADS must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(None),
    }
}

fn run() -> anyhow::Result<Result<String, String>> {
    let argv = config::expand_args(std::env::args_os().collect())?;
    let cli = Cli::try_parse_from(argv).unwrap_or_else(|e| e.exit());
    if let Some(n) = thread_count(&cli)? {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let report = commands::run(&cli)?;
    let text = report.render(cli.format(), cli.seed)?;
    Ok(if report.passed { Ok(text) } else { Err(text) })
}

fn main() -> ExitCode {
    let (text, code) = match run() {
        Ok(Ok(text)) => (text, 0),
        Ok(Err(text)) => (text, CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(USAGE);
        }
    };
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes());
    ExitCode::from(code)
}
