use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod commands;

use commands::{Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let written = match cli.format {
                Format::Text => stdout.write_all(outcome.text.as_bytes()),
                Format::Machine => writeln!(stdout, "{}", outcome.json),
            };
            if written.is_err() {
                return ExitCode::from(2);
            }
            if let Some(message) = outcome.diagnostic {
                eprintln!("{message}");
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
