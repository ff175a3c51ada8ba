use std::cmp::Ordering;
use std::fmt::Write as _;

use super::parser::{Definition, Value};
use crate::cardinals::Card;
use crate::error::Result;
use crate::hahn_concrete::Val;
use crate::oracle::spectrum_soundness;
use crate::order_terms::{extend_order, OrderTerm};
use crate::struct_classify::{
    classify_field, classify_group, extend_field, extend_group, cut_path, valuation_path, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Classify,
    Extend,
    Verify,
    CheckConditions,
}

impl Command {
    pub fn keyword(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Classify => "classify",
            Command::Extend => "extend",
            Command::Verify => "verify",
            Command::CheckConditions => "check-conditions",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub depth: usize,
    pub bound: Option<Card>,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options { depth: 100, bound: None, format: Format::Text }
    }
}

/// Results for one definition: ordered key/value rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub kind: &'static str,
    pub rows: Vec<(String, String)>,
    pub failed: bool,
}

impl Section {
    fn row(&mut self, key: impl Into<String>, value: impl ToString) {
        self.rows.push((key.into(), value.to_string()));
    }

    fn check(&mut self, key: impl Into<String>, ok: bool, detail: Option<String>) {
        let mut v = if ok { "pass".to_string() } else { "fail".to_string() };
        if let Some(d) = detail {
            v = format!("{v} {d}");
        }
        self.failed |= !ok;
        self.row(key, v);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: Command,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.sections.iter().any(|s| s.failed)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for s in &self.sections {
            match format {
                Format::Text => {
                    let _ = writeln!(out, "== {} ({}) ==", s.name, s.kind);
                    let width = s.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                    for (k, v) in &s.rows {
                        let _ = writeln!(out, "  {k:<width$}  {v}");
                    }
                }
                Format::Machine => {
                    let _ = writeln!(out, "{}.kind = {}", s.name, s.kind);
                    for (k, v) in &s.rows {
                        let _ = writeln!(out, "{}.{k} = {v}", s.name);
                    }
                }
            }
        }
        let status = if self.failed() { "fail" } else { "pass" };
        match format {
            Format::Text => {
                let _ = writeln!(out, "{} {status}", self.command.keyword());
            }
            Format::Machine => {
                let _ = writeln!(out, "status = {status}");
            }
        }
        out
    }
}

fn sign(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "-1",
        Ordering::Equal => "0",
        Ordering::Greater => "1",
    }
}

fn verdict_rows(s: &mut Section, v: &Verdict) {
    s.row("symmetric", v.symmetric);
    s.row("strong", v.strong);
    s.row("extreme", v.extreme);
    s.row("symmetric_d", v.symmetric_d);
    s.row("extreme_d", v.extreme_d);
    s.row("spherical_balls", v.spherical_balls);
    s.row("facts", if v.facts.is_empty() { "none".to_string() } else { v.facts.join(", ") });
}

fn term_section(s: &mut Section, cmd: Command, t: &OrderTerm, opts: &Options) -> Result<()> {
    match cmd {
        Command::Spectrum => {
            let sp = t.cut_spectrum()?;
            s.row("spectrum", &sp);
            if let Some(b) = &opts.bound {
                let pairs: Vec<String> = sp.pairs_below(b)?.iter().map(ToString::to_string).collect();
                s.row(format!("pairs<{b}"), format!("{{{}}}", pairs.join(",")));
            }
        }
        Command::Classify => {
            let c = t.completeness()?;
            s.row("symmetric", c.predicates.symmetric);
            s.row("strong", c.predicates.strong);
            s.row("extreme", c.predicates.extreme);
            s.row("spherical_balls", c.predicates.spherical_balls);
            let show = |w: Option<_>| w.map_or("none".to_string(), |p: crate::cardinals::CofPair| p.to_string());
            s.row("symmetric_witness", show(c.symmetric_witness));
            s.row("weak_witness", show(c.weak_witness));
            s.row("ball_witness", show(c.ball_witness.clone()));
            if let Some(b) = &opts.bound {
                // A witness at or above the bound is invisible to enumeration.
                let by_enum = t.spherical_balls_by_enumeration(b)?;
                let visible = c.ball_witness.as_ref().is_some_and(|w| w.left < *b && w.right < *b);
                let sph = c.predicates.spherical_balls;
                let consistent = if by_enum { sph || !visible } else { !sph };
                s.check(format!("balls_by_enumeration<{b}"), consistent, None);
            }
        }
        Command::Extend => {
            let e = extend_order(t)?;
            s.row("mu", &e.mu);
            s.row("k0", &e.k0);
            s.row("l0", &e.l0);
            s.row("k1", &e.k1);
            s.row("l1", &e.l1);
            s.row("embedding", e.embedding);
            s.row("result", &e.term);
            for c in e.term.check_side_conditions()? {
                s.check(format!("condition.{}", c.name), c.passed, c.witness);
            }
            let p = e.term.completeness_predicates()?;
            s.row("extreme", p.extreme);
        }
        Command::Verify => {
            let r = spectrum_soundness(t, opts.depth)?;
            s.row("chain", &r.chain);
            for l in &r.lines {
                s.failed |= !l.passed();
                s.row("pair", l);
            }
            s.check("cf", r.cf.0 == r.cf.1, Some(format!("term={} chain={}", r.cf.0, r.cf.1)));
            s.check("ci", r.ci.0 == r.ci.1, Some(format!("term={} chain={}", r.ci.0, r.ci.1)));
            s.row("note", format!("extra cuts searched among {} sampled cuts only", r.sampled_cuts));
        }
        Command::CheckConditions => {
            for c in t.check_side_conditions()? {
                s.check(format!("condition.{}", c.name), c.passed, c.witness);
            }
        }
    }
    Ok(())
}

fn applies(cmd: Command, v: &Value) -> bool {
    match (cmd, v) {
        (Command::CheckConditions, Value::Term(OrderTerm::LexSchedule(_) | OrderTerm::LexRefined(_))) => true,
        (Command::CheckConditions, _) => false,
        (Command::Verify, v) => !matches!(v, Value::Group(_) | Value::Field(_)),
        (_, Value::Hahn(_) | Value::Series(_)) => false,
        _ => true,
    }
}

fn section(cmd: Command, d: &Definition, opts: &Options) -> Result<Section> {
    let mut s = Section { name: d.name.clone(), kind: d.value.kind(), rows: Vec::new(), failed: false };
    s.row("expr", &d.value);
    if !applies(cmd, &d.value) {
        s.row("skipped", format!("{} does not apply to a {}", cmd.keyword(), d.value.kind()));
        return Ok(s);
    }
    match (&d.value, cmd) {
        (Value::Term(t), cmd) => term_section(&mut s, cmd, t, opts)?,
        (Value::Group(g), Command::Spectrum) => s.row("spectrum", g.order_spectrum()?),
        (Value::Group(g), Command::Classify) => {
            verdict_rows(&mut s, &classify_group(g)?);
            let agree = valuation_path(g)? == cut_path(g)?;
            s.check("paths_agree", agree, None);
        }
        (Value::Group(g), Command::Extend) => {
            let h = extend_group(g)?;
            s.row("result", &h);
            verdict_rows(&mut s, &classify_group(&h)?);
        }
        (Value::Group(g), _) => term_section(&mut s, cmd, &OrderTerm::group(g.clone()), opts)?,
        (Value::Field(k), Command::Spectrum) => s.row("spectrum", k.additive_group().order_spectrum()?),
        (Value::Field(k), Command::Classify) => verdict_rows(&mut s, &classify_field(k)?),
        (Value::Field(k), Command::Extend) => {
            let e = extend_field(k)?;
            s.row("result", &e);
            verdict_rows(&mut s, &classify_field(&e)?);
        }
        (Value::Field(k), _) => {
            term_section(&mut s, cmd, &OrderTerm::group(k.additive_group()), opts)?
        }
        (Value::Hahn(h), _) => {
            s.row("signum", sign(h.signum()));
            s.row("valuation", h.nat_valuation());
            s.row("abs", h.abs());
        }
        (Value::Series(x), _) => {
            s.row("signum", sign(x.signum()));
            let v = match x.nat_valuation() {
                Val::Infinity => "inf".to_string(),
                Val::Fin(g) => format!("({})", g.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
            };
            s.row("valuation", v);
            match x.residue() {
                Ok(r) => s.row("residue", r),
                Err(_) => s.row("residue", "none"),
            }
        }
    }
    Ok(s)
}

/// Runs one command over every definition. Errors are reported inside the
/// offending definition's section and mark the report failed.
pub fn run_command(cmd: Command, defs: &[Definition], opts: &Options) -> Report {
    let sections = defs
        .iter()
        .map(|d| {
            section(cmd, d, opts).unwrap_or_else(|e| Section {
                name: d.name.clone(),
                kind: d.value.kind(),
                rows: vec![("expr".into(), d.value.to_string()), ("error".into(), e.to_string())],
                failed: true,
            })
        })
        .collect();
    Report { command: cmd, sections }
}
