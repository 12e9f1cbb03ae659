use std::process::ExitCode;

use clap::Parser;
use skein_cli::{run, Cli};

fn main() -> ExitCode {
    let out = run(Cli::parse());
    if !out.stdout.is_empty() {
        println!("{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr);
    }
    ExitCode::from(out.code as u8)
}
