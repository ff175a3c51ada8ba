use std::process::Command;

use super::fixture_path;

pub const FIXTURES: [&str; 5] = ["orders", "constructions", "structures", "countable", "pool"];

/// `(fixture, command, extra flags)` pinned by golden files.
pub const GOLDEN_CASES: [(&str, &str, &[&str]); 10] = [
    ("orders", "spectrum", &["--bound", "aleph(3)"]),
    ("orders", "classify", &[]),
    ("constructions", "check-conditions", &[]),
    ("constructions", "extend", &[]),
    ("constructions", "spectrum", &["--bound", "aleph(5)"]),
    ("structures", "classify", &["--bound", "aleph(4)"]),
    ("structures", "extend", &[]),
    ("structures", "verify", &["--depth", "20"]),
    ("countable", "verify", &[]),
    ("pool", "classify", &[]),
];

pub const FORMATS: [&str; 2] = ["text", "machine"];

/// Runs the binary from the tests directory: stdout, stderr, exit status.
pub fn run(args: &[&str]) -> (Vec<u8>, Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_symcomplete"))
        .current_dir(fixture_path(""))
        .args(args)
        .output()
        .unwrap();
    (out.stdout, out.stderr, out.status.code().unwrap())
}

pub fn golden_name(fixture: &str, cmd: &str, format: &str) -> String {
    format!("{fixture}.{cmd}.{format}.txt")
}

pub fn golden_args(fixture: &str, cmd: &'static str, format: &'static str, extra: &[&'static str]) -> Vec<String> {
    let mut args = vec!["--in".to_string(), format!("fixtures/{fixture}.sc")];
    args.extend(["--cmd", cmd, "--format", format].map(String::from));
    args.extend(extra.iter().map(|s| s.to_string()));
    args
}

#[derive(Debug, Default)]
pub struct GoldenTally {
    pub runs: usize,
    pub unstable: Vec<String>,
    pub mismatched: Vec<String>,
}

/// Runs every golden case twice. With `update`, rewrites the golden files.
pub fn check_goldens(update: bool) -> GoldenTally {
    let mut t = GoldenTally::default();
    for (fixture, cmd, extra) in GOLDEN_CASES {
        for format in FORMATS {
            let args = golden_args(fixture, cmd, format, extra);
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let first = run(&args);
            let second = run(&args);
            t.runs += 2;
            let name = golden_name(fixture, cmd, format);
            if first != second || !first.1.is_empty() {
                t.unstable.push(name.clone());
            }
            let path = fixture_path("golden").join(&name);
            if update {
                std::fs::write(&path, &first.0).unwrap();
            } else if std::fs::read(&path).ok().as_ref() != Some(&first.0) {
                t.mismatched.push(name);
            }
        }
    }
    t
}

/// Fixtures whose canonical print does not reparse to the same definitions
/// or does not print identically again.
pub fn round_trip_failures() -> Vec<String> {
    use symcomplete::cli::{parse_definitions, print_definitions};
    let mut bad = Vec::new();
    for f in FIXTURES {
        let defs = parse_definitions(&super::read_fixture(&format!("fixtures/{f}.sc"))).unwrap();
        let printed = print_definitions(&defs);
        match parse_definitions(&printed) {
            Ok(re) if re == defs && print_definitions(&re) == printed => {}
            _ => bad.push(f.to_string()),
        }
    }
    bad
}
