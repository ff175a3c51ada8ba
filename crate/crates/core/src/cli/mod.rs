//! Batch front end: definition files in, deterministic reports out.

mod lexer;
mod parser;
mod report;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub use lexer::{tokenize, Tok, Token};
pub use parser::{parse_card, parse_definitions, parse_value, print_definitions, Definition, Value};
pub use report::{run_command, Command, Format, Options, Report, Section};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CmdArg {
    Spectrum,
    Classify,
    Extend,
    Verify,
    CheckConditions,
    /// Print the definitions in canonical form.
    Print,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "symcomplete", about = "Cofinality spectra and completeness classification")]
pub struct Args {
    /// Definitions file (`NAME = EXPR` per line, `#` comments).
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub cmd: CmdArg,
    /// Ladder depth for witness verification.
    #[arg(long, default_value_t = 100)]
    pub depth: usize,
    /// Enumerate spectrum pairs below this cardinal, e.g. `aleph(3)`.
    #[arg(long)]
    pub bound: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

/// Output text and exit status for parsed arguments.
pub fn execute(args: &Args, source: &str) -> (String, i32) {
    let fail = |msg: String| (format!("error: {msg}\n"), 2);
    let defs = match parse_definitions(source) {
        Ok(d) => d,
        Err(e) => return fail(format!("{}: {e}", args.input.display())),
    };
    let bound = match args.bound.as_deref().map(parse_card).transpose() {
        Ok(b) => b,
        Err(e) => return fail(format!("--bound: {e}")),
    };
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let cmd = match args.cmd {
        CmdArg::Print => return (print_definitions(&defs), 0),
        CmdArg::Spectrum => Command::Spectrum,
        CmdArg::Classify => Command::Classify,
        CmdArg::Extend => Command::Extend,
        CmdArg::Verify => Command::Verify,
        CmdArg::CheckConditions => Command::CheckConditions,
    };
    let opts = Options { depth: args.depth, bound, format };
    let report = run_command(cmd, &defs, &opts);
    (report.render(format), i32::from(report.failed()))
}
