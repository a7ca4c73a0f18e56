use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hamlie::cli::{self, Cli, CliError};
use hamlie::formats;

/// Exit codes: 0 all checks passed, 1 a check failed or the probe was
/// inconclusive, 2 bad arguments or input.
fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list_checks {
        print!("{}", cli::list_checks());
        return ExitCode::SUCCESS;
    }
    let outcome = match cli::run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Usage(_)) {
                eprintln!("run with --help for usage");
            }
            return ExitCode::from(2);
        }
    };
    let json = formats::to_json(&outcome.report);
    if let Some(path) = &cli.output {
        if let Err(e) = formats::write_atomic(path, &json) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let text = if cli.json { json } else { outcome.summary };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().write_all(text.as_bytes());
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
