use std::process::ExitCode;

use clap::Parser;

use braided_orbits::cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, outcome) = run(&cli);
    print!("{}", render(&cli, &report));
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(outcome as u8)
}
