use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use weakhopf::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    eprint!("{}", outcome.diagnostics);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => std::io::stdout().write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code as u8)
}
