use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use skewlab::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(cli);
    let mut stdout = std::io::stdout().lock();
    match outcome {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err((text, failure)) => {
            if let Some(text) = text {
                let _ = stdout.write_all(text.as_bytes());
            }
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
