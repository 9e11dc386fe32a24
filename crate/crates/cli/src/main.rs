use std::process::ExitCode;

use clap::Parser;
use fusionkit_cli::{run, Cli, CliError, Status};

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("FUSIONKIT_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                fusionkit::configure_threads(n);
            }
            _ => {
                eprintln!("error: FUSIONKIT_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(Status::Usage as u8);
            }
        }
    }
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(Status::Usage as u8);
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(Status::Failed as u8);
        }
    };
    match &cli.command.common().out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(Status::Failed as u8);
            }
        }
        None => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.status as u8)
}
