mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::report::Status;

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("LADDER_THREADS") {
        let n = v
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| anyhow::anyhow!("LADDER_THREADS must be a positive integer, got {v:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let report = match commands::run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = matches!(e.downcast_ref::<ladder_core::Error>(), Some(ladder_core::Error::Internal(_)));
            return ExitCode::from(if internal { 1 } else { 2 });
        }
    };
    let mut stdout = std::io::stdout().lock();
    match report.emit(cli.format, &mut stdout) {
        Ok(Ok(())) => {}
        Ok(Err(usage)) => {
            eprintln!("error: {usage}");
            return ExitCode::from(2);
        }
        Err(e) if is_broken_pipe(&e) => return ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    }
    match report.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Inconclusive(msg) => {
            eprintln!("warning: {msg}");
            ExitCode::SUCCESS
        }
        Status::Failed => ExitCode::from(1),
    }
}
