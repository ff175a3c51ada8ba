use std::process::ExitCode;

use clap::Parser;
use symcomplete::cli::{execute, Args};

fn main() -> ExitCode {
    let args = Args::parse();
    let source = match std::fs::read_to_string(&args.input) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let (out, status) = execute(&args, &source);
    if status == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(status as u8)
}
