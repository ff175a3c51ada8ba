//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::cli::{check_goldens, round_trip_failures};
use common::laws::{hahn_laws, series_laws};
use common::{a, descriptors_over, pair, pool, random_descriptors, terms_of, two_path_tally};
use symcomplete::cardinals::{Card, CardSet, CofPair};
use symcomplete::cli::{parse_value, Value};
use symcomplete::oracle::spectrum_soundness;
use symcomplete::order_terms::{extend_order_with, AtomDecl, OrderTerm};
use symcomplete::struct_classify::{classify_group, Components, GroupDescriptor, Tri};

const SPECTRUM_LIMIT: u64 = 5;
const SPECTRUM_BUDGET: Duration = Duration::from_secs(1);
const MAX_ATOM_CARD: u64 = 3;
const RANDOM_DESCRIPTORS: usize = 1000;
const MIN_POOL: usize = 50;
const BALL_BOUND: u64 = 20;
const LAW_CASES: usize = 10_000;
const LAW_BUDGET: Duration = Duration::from_secs(30);
const ORACLE_DEPTH: usize = 100;
const MIN_COUNTABLE: usize = 20;

struct Outcome {
    ok: bool,
    detail: String,
}

type Criterion = fn() -> Outcome;

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn term(src: &str) -> OrderTerm {
    match parse_value(src) {
        Ok(Value::Term(t)) => t,
        other => panic!("{src}: {other:?}"),
    }
}

fn one() -> Card {
    Card::One
}

fn set(pairs: &[(Card, Card)]) -> BTreeSet<CofPair> {
    pairs.iter().map(|(l, r)| pair(l.clone(), r.clone())).collect()
}

/// Name, term source and hand-derived spectrum below `ℵ_5`.
type SpectrumCase = (&'static str, &'static str, BTreeSet<CofPair>);

fn spectrum_cases() -> Vec<SpectrumCase> {
    let phi = "[1:aleph(0),aleph(0):aleph(1),aleph(1):aleph(0)]";
    let phi47 = "[1:aleph(2),aleph(0):aleph(2),aleph(1):aleph(2),aleph(2):aleph(0)]";
    let leak = |s: String| -> &'static str { Box::leak(s.into_boxed_str()) };
    vec![
        (
            "schedule over empty, mu=aleph(0)",
            "lexsched(mu=aleph(0); k0=aleph(1); l0=aleph(1))",
            set(&[
                (one(), a(0)),
                (a(0), one()),
                (a(0), a(0)),
                (a(0), a(1)),
                (a(2), a(0)),
                (a(4), a(0)),
                (a(4), a(1)),
                (a(4), a(2)),
                (a(2), a(3)),
            ]),
        ),
        (
            "schedule over empty, mu=aleph(1), l0=aleph(2)",
            "lexsched(mu=aleph(1); k0=aleph(1); l0=aleph(2))",
            set(&[
                (one(), a(1)),
                (a(1), one()),
                (a(1), a(0)),
                (a(1), a(1)),
                (a(0), a(2)),
                (a(3), a(0)),
                (a(3), a(1)),
                (a(0), a(4)),
                (a(1), a(2)),
                (a(3), a(4)),
            ]),
        ),
        (
            "schedule over well(aleph(1)), mu=aleph(2)",
            "lexsched(mu=aleph(2); base=well(aleph(1)); k0=aleph(1); l0=aleph(1))",
            set(&[
                (one(), a(2)),
                (a(2), one()),
                (a(2), a(0)),
                (a(0), a(3)),
                (a(1), a(3)),
                (a(4), a(0)),
                (a(4), a(1)),
                (a(4), a(2)),
                (a(2), a(3)),
                (a(2), a(1)),
            ]),
        ),
        (
            "refined, worked example",
            leak(format!("lexref(mu=aleph(2); k0=aleph(2); l0=aleph(2); phil={phi}; phir={phi})")),
            set(&[(one(), a(2)), (a(2), one()), (a(0), a(1)), (a(1), a(0))]),
        ),
        (
            "refined, successor map with on bound",
            "lexref(mu=aleph(3); k0=aleph(4); l0=aleph(2); phil=[1:aleph(0),*:succ]; phir=[1:aleph(0),aleph(0):aleph(1),*:aleph(0)]; on=aleph(w+1))",
            set(&[
                (one(), a(3)),
                (a(3), one()),
                (a(0), a(1)),
                (a(1), a(0)),
                (a(2), a(0)),
                (a(3), a(0)),
                (a(2), a(1)),
                (a(3), a(2)),
            ]),
        ),
        (
            "refined over well(aleph(1))",
            leak(format!("lexref(mu=aleph(3); base=well(aleph(1)); k0=aleph(1); l0=aleph(2); phil={phi47}; phir={phi47})")),
            set(&[(one(), a(3)), (a(3), one()), (a(0), a(2)), (a(1), a(2)), (a(2), a(0)), (a(2), a(1))]),
        ),
    ]
}

fn criterion_spectra() -> Outcome {
    let cases = spectrum_cases();
    let start = Instant::now();
    let mut bad = Vec::new();
    for (name, src, expected) in &cases {
        let got = term(src).cut_spectrum().and_then(|s| s.pairs_below(&a(SPECTRUM_LIMIT)));
        if got.as_ref().ok() != Some(expected) {
            bad.push(format!("{name}: {got:?}"));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < SPECTRUM_BUDGET,
        format!("{} sets, {} mismatches, {elapsed:?} {}", cases.len(), bad.len(), bad.join("; ")),
    )
}

fn atoms() -> Vec<OrderTerm> {
    let mut out = Vec::new();
    for card in 0..=MAX_ATOM_CARD {
        let ends: Vec<Card> = std::iter::once(one()).chain((0..=card).map(a)).collect();
        let sets = [CardSet::empty(), CardSet::reg_below(&a(1)), CardSet::at_most(&a(card))];
        for cf in &ends {
            for ci in &ends {
                for (i, coin) in sets.iter().enumerate() {
                    let cofin = &sets[(i + 1) % sets.len()];
                    let decl = AtomDecl::new(format!("x{card}"), cf.clone(), ci.clone())
                        .coin(coin.clone())
                        .cofin(cofin.clone())
                        .card(a(card));
                    if let Ok(t) = OrderTerm::atom(decl) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

fn criterion_recipe() -> Outcome {
    let atoms = atoms();
    let mut bad = Vec::new();
    let mut runs = 0;
    for t in &atoms {
        for k0 in [a(1), a(2)] {
            for l0 in [a(1), a(2)] {
                runs += 1;
                let ok = extend_order_with(t, &k0, &l0).and_then(|e| {
                    let conditions = e.term.check_side_conditions()?.iter().all(|c| c.passed);
                    Ok(conditions && e.term.completeness_predicates()?.extreme)
                });
                if !matches!(ok, Ok(true)) {
                    bad.push(format!("{t} k0={k0} l0={l0}: {ok:?}"));
                }
            }
            runs += 1;
            let down = extend_order_with(t, &a(0), &k0)
                .and_then(|e| e.term.completeness_predicates())
                .map(|p| (p.strong, p.extreme));
            if down.as_ref().ok() != Some(&(true, false)) {
                bad.push(format!("{t} k0=aleph(0) l0={k0}: {down:?}"));
            }
        }
    }
    outcome(
        bad.is_empty() && atoms.len() >= 20,
        format!("{} atoms, {runs} extensions, {} disagreements {}", atoms.len(), bad.len(), bad.first().cloned().unwrap_or_default()),
    )
}

fn criterion_two_paths() -> Outcome {
    let pool = pool();
    let exhaustive: Vec<GroupDescriptor> = pool.iter().flat_map(|(_, t)| descriptors_over(t)).collect();
    let random = random_descriptors(RANDOM_DESCRIPTORS, 3);
    let t = two_path_tally(exhaustive.iter().chain(random.iter()));
    outcome(
        t.disagreements.is_empty() && t.underived == 0 && pool.len() >= MIN_POOL && random.len() == RANDOM_DESCRIPTORS,
        format!(
            "pool {} terms, {} exhaustive + {} random descriptors, {} spherical compared, {} disagreements",
            pool.len(),
            exhaustive.len(),
            random.len(),
            t.compared,
            t.disagreements.len()
        ),
    )
}

fn criterion_balls() -> Outcome {
    let pool = pool();
    let mut bad = Vec::new();
    let mut compared = 0;
    for (name, t) in &pool {
        let tagged = t.completeness_predicates().map(|p| p.spherical_balls);
        let enumerated = t.spherical_balls_by_enumeration(&a(BALL_BOUND));
        match (tagged, enumerated) {
            (Ok(x), Ok(y)) if x == y => compared += 1,
            (x, y) => bad.push(format!("{name}: {x:?} vs {y:?}")),
        }
    }
    outcome(
        bad.is_empty() && compared >= MIN_POOL,
        format!("{compared} of {} pool terms agree {}", pool.len(), bad.join("; ")),
    )
}

fn criterion_integers() -> Outcome {
    let mut bad = Vec::new();
    let mut check = |what: &str, got: Tri, want: bool| {
        if got != Tri::from(want) {
            bad.push(format!("{what}={got}"));
        }
    };
    let z = GroupDescriptor::new(OrderTerm::finite(1), Components::IntsAtTop, true, true, false).unwrap();
    let vz = classify_group(&z).unwrap();
    check("Z.symmetric", vz.symmetric, false);
    check("Z.spherical_balls", vz.spherical_balls, true);
    check("Z.symmetric_d", vz.symmetric_d, true);
    check("Z.extreme_d", vz.extreme_d, false);

    // H strongly complete with uncountable cofinality, and with countable
    // cofinality: cf(H) is ci(vH), which is l0 here.
    let mut cases = 0;
    for (l0, uncountable) in [("aleph(1)", true), ("aleph(0)", false)] {
        let vset = term(&format!("lexsched(mu=aleph(2); k0=aleph(1); l0={l0})"));
        let h = GroupDescriptor::hahn(vset.clone()).unwrap();
        let vh = classify_group(&h).unwrap();
        check("H.strong", vh.strong, true);
        check("cf(H) uncountable", Tri::from(h.cf_group().unwrap().is_uncountable()), uncountable);
        let hz_vset = OrderTerm::sum(vset, OrderTerm::finite(1));
        let hz = GroupDescriptor::new(hz_vset, Components::IntsAtTop, true, true, false).unwrap();
        let v = classify_group(&hz).unwrap();
        check("HxZ.symmetric_d", v.symmetric_d, true);
        check("HxZ.extreme_d", v.extreme_d, uncountable);
        cases += 1;
    }
    outcome(bad.is_empty(), format!("Z and {cases} products H x Z {}", bad.join(", ")))
}

fn criterion_laws() -> Outcome {
    let start = Instant::now();
    let tallies: Vec<_> = hahn_laws(LAW_CASES, 7).into_iter().chain(series_laws(LAW_CASES, 11)).collect();
    let elapsed = start.elapsed();
    let failures: usize = tallies.iter().map(|t| t.failures).sum();
    let short = tallies.iter().filter(|t| t.cases < LAW_CASES).count();
    let families: BTreeSet<_> = tallies.iter().map(|t| t.family.clone()).collect();
    let first = tallies.iter().find_map(|t| t.first_failure.as_ref().map(|f| format!("{} {}: {f}", t.family, t.law)));
    outcome(
        failures == 0 && short == 0 && elapsed < LAW_BUDGET,
        format!(
            "{} laws over {} families, {LAW_CASES} cases each, {failures} failures, {elapsed:?} {}",
            tallies.len(),
            families.len(),
            first.unwrap_or_default()
        ),
    )
}

fn criterion_oracle() -> Outcome {
    let terms = terms_of("fixtures/countable.sc");
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (name, t) in &terms {
        match spectrum_soundness(t, ORACLE_DEPTH) {
            Ok(r) => {
                pairs += r.lines.len();
                let claimed = t.cut_spectrum().and_then(|s| s.countable_pairs()).unwrap_or_default();
                if !r.passed() || r.witnessed() != claimed || r.lines.iter().any(|l| !l.claimed) {
                    bad.push(name.clone());
                }
            }
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    outcome(
        bad.is_empty() && terms.len() >= MIN_COUNTABLE,
        format!("{} terms, {pairs} pair lines at depth {ORACLE_DEPTH}, {} discrepancies {}", terms.len(), bad.len(), bad.join(", ")),
    )
}

fn criterion_cli() -> Outcome {
    let g = check_goldens(false);
    let rt = round_trip_failures();
    outcome(
        g.unstable.is_empty() && g.mismatched.is_empty() && rt.is_empty(),
        format!(
            "{} runs, unstable {:?}, golden mismatches {:?}, round-trip failures {:?}",
            g.runs, g.unstable, g.mismatched, rt
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("spectrum formulas", criterion_spectra),
        ("recipe extension", criterion_recipe),
        ("two-path classifier agreement", criterion_two_paths),
        ("ball completeness equivalence", criterion_balls),
        ("integer block", criterion_integers),
        ("hahn law suite", criterion_laws),
        ("oracle agreement", criterion_oracle),
        ("cli determinism and round trip", criterion_cli),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.ok);
        println!("criterion {} {name} ... {} ({})", i + 1, if o.ok { "pass" } else { "fail" }, o.detail.trim_end());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
