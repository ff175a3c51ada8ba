use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::chain::{ConcreteChain, Elem};
use super::cuts::{CutWitness, Side};
use crate::cardinals::{Card, CofPair};
use crate::error::{Error, Result};
use crate::order_terms::OrderTerm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(String),
}

impl Check {
    pub fn passed(&self) -> bool {
        *self == Check::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Pass => write!(f, "pass"),
            Check::Fail(r) => write!(f, "fail ({r})"),
        }
    }
}

fn tag_matches(claim: &Card, side: &Side) -> std::result::Result<(), String> {
    match (claim, side) {
        (Card::One, Side::Extremal(_)) => Ok(()),
        (c, Side::Ladder(_)) if *c == Card::aleph0() => Ok(()),
        (Card::One, Side::Ladder(_)) => Err("claimed extremal element, got a ladder".into()),
        (c, Side::Extremal(_)) if *c == Card::aleph0() => Err("claimed a ladder, got an extremal element".into()),
        (c, _) => Err(format!("{c} cannot be witnessed by a countable chain")),
    }
}

/// The first `depth` rungs, strictly monotone in the given direction.
fn prefix<'a>(
    c: &ConcreteChain,
    side: &'a Side,
    depth: usize,
    increasing: bool,
    what: &str,
) -> std::result::Result<&'a [Elem], String> {
    let rungs = side.rungs();
    if let Side::Ladder(v) = side {
        if v.len() < depth {
            return Err(format!("{what} ladder has {} rungs, need {depth}", v.len()));
        }
    }
    let rungs = if matches!(side, Side::Ladder(_)) { &rungs[..depth] } else { rungs };
    for (i, e) in rungs.iter().enumerate() {
        if !c.contains(e) {
            return Err(format!("{what} rung {i} = {e} is not in the chain"));
        }
    }
    for (i, w) in rungs.windows(2).enumerate() {
        let ok = if increasing { c.lt(&w[0], &w[1]) } else { c.lt(&w[1], &w[0]) };
        if !ok {
            return Err(format!("{what} ladder not strictly monotone at index {}", i + 1));
        }
    }
    Ok(rungs)
}

fn check_witness(c: &ConcreteChain, w: &CutWitness, depth: usize) -> std::result::Result<(), String> {
    tag_matches(&w.claim.left, &w.lower)?;
    tag_matches(&w.claim.right, &w.upper)?;
    let lo = prefix(c, &w.lower, depth, true, "lower")?;
    let hi = prefix(c, &w.upper, depth, false, "upper")?;
    let (Some(dmax), Some(emin)) = (lo.last(), hi.last()) else {
        return Err("empty side".into());
    };
    if !c.lt(dmax, emin) {
        return Err(format!("lower rung {dmax} is not below upper rung {emin}"));
    }
    match (&w.lower, &w.upper) {
        (Side::Extremal(d), Side::Extremal(e)) => {
            if let Some(x) = c.between(d, e) {
                return Err(format!("{x} lies between the extremal elements"));
            }
        }
        _ => {
            // Every point squeezed between rung k of both sides is eventually
            // passed by one of the ladders.
            for k in 0..depth / 2 {
                let d = &lo[k.min(lo.len() - 1)];
                let e = &hi[k.min(hi.len() - 1)];
                let Some(x) = c.between(d, e) else {
                    return Err(format!("nothing between rungs at index {k} of a ladder cut"));
                };
                let passed = matches!(w.lower, Side::Ladder(_)) && lo.iter().any(|r| !c.lt(r, &x))
                    || matches!(w.upper, Side::Ladder(_)) && hi.iter().any(|r| !c.lt(&x, r));
                if !passed {
                    return Err(format!("{x} separates the ladders at index {k}"));
                }
            }
        }
    }
    Ok(())
}

/// Checks monotonicity, separation, adjacency and the claimed tags to `depth`.
pub fn verify_witness(c: &ConcreteChain, w: &CutWitness, depth: usize) -> Check {
    match check_witness(c, w, depth) {
        Ok(()) => Check::Pass,
        Err(r) => Check::Fail(r),
    }
}

fn end_tag(c: &ConcreteChain, side: &Side, depth: usize, upward: bool) -> Result<Card> {
    let fail = |m: String| Error::domain(format!("{c}: {m}"));
    match side {
        Side::Extremal(e) => {
            let beyond = if upward { c.above(e) } else { c.below(e) };
            match beyond {
                None => Ok(Card::One),
                Some(x) => Err(fail(format!("{x} lies beyond the claimed end {e}"))),
            }
        }
        Side::Ladder(_) => {
            let rungs = prefix(c, side, depth, upward, "end").map_err(fail)?;
            for r in &rungs[..depth.div_ceil(2)] {
                let x = if upward { c.above(r) } else { c.below(r) }.ok_or_else(|| fail(format!("{r} is an end")))?;
                let reached = rungs.iter().any(|s| if upward { !c.lt(s, &x) } else { !c.lt(&x, s) });
                if !reached {
                    return Err(fail(format!("ladder never passes {x}")));
                }
            }
            Ok(Card::aleph0())
        }
    }
}

/// Cofinality found by searching for a maximum or a cofinal ladder.
pub fn derive_cf(c: &ConcreteChain, depth: usize) -> Result<Card> {
    end_tag(c, &c.top(depth), depth, true)
}

/// Coinitiality found the same way from below.
pub fn derive_ci(c: &ConcreteChain, depth: usize) -> Result<Card> {
    end_tag(c, &c.bottom(depth), depth, false)
}

/// Concrete model of a term from the countable fragment. Atoms are
/// concretizable when named `nat`, `int` or `rat`.
pub fn concretize(t: &OrderTerm) -> Result<ConcreteChain> {
    let no = |what: &str| Error::domain(format!("{what} is outside the concrete fragment"));
    Ok(match t {
        OrderTerm::Empty => return Err(no("the empty order")),
        OrderTerm::Finite(n) => ConcreteChain::Finite(*n),
        OrderTerm::Well(k) if *k == Card::aleph0() => ConcreteChain::Nat,
        OrderTerm::Well(k) => return Err(no(&format!("well({k})"))),
        OrderTerm::Rev(a) => ConcreteChain::rev(concretize(a)?),
        OrderTerm::Sum(a, b) => ConcreteChain::sum(concretize(a)?, concretize(b)?),
        OrderTerm::Lex(a, b) => ConcreteChain::lex(concretize(a)?, concretize(b)?),
        OrderTerm::Atom(a) => match a.name.as_str() {
            "nat" => ConcreteChain::Nat,
            "int" => ConcreteChain::Int,
            "rat" => ConcreteChain::Rat,
            other => return Err(no(&format!("atom {other}"))),
        },
        other => return Err(no(&other.to_string())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLine {
    pub pair: CofPair,
    pub witness: String,
    pub depth: usize,
    pub claimed: bool,
    pub check: Check,
}

impl PairLine {
    /// Claimed pairs must be witnessed; witnessed pairs must be claimed.
    pub fn passed(&self) -> bool {
        self.claimed && self.check.passed()
    }
}

impl fmt::Display for PairLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "fail" };
        write!(f, "pair={} witness={} depth={} verdict={verdict}", self.pair, self.witness, self.depth)?;
        if !self.claimed {
            write!(f, " note=unclaimed")?;
        }
        if let Check::Fail(r) = &self.check {
            write!(f, " note={}", r.replace(' ', "_"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessReport {
    pub chain: ConcreteChain,
    pub lines: Vec<PairLine>,
    pub cf: (Card, Card),
    pub ci: (Card, Card),
    pub sampled_cuts: usize,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(PairLine::passed) && self.cf.0 == self.cf.1 && self.ci.0 == self.ci.1
    }

    /// Pairs witnessed by some sampled cut.
    pub fn witnessed(&self) -> BTreeSet<CofPair> {
        self.lines.iter().filter(|l| l.check.passed()).map(|l| l.pair.clone()).collect()
    }
}

impl fmt::Display for SoundnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "chain={}", self.chain)?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        let v = |ok: bool| if ok { "pass" } else { "fail" };
        writeln!(f, "cf term={} chain={} verdict={}", self.cf.0, self.cf.1, v(self.cf.0 == self.cf.1))?;
        writeln!(f, "ci term={} chain={} verdict={}", self.ci.0, self.ci.1, v(self.ci.0 == self.ci.1))?;
        write!(f, "note: extra cuts searched among {} sampled cuts only", self.sampled_cuts)
    }
}

/// Witnesses every countable spectrum pair claimed for `t` and searches
/// sampled cuts for pairs missing from the claim.
pub fn spectrum_soundness(t: &OrderTerm, depth: usize) -> Result<SoundnessReport> {
    let chain = concretize(t)?;
    let claimed = t.cut_spectrum()?.countable_pairs()?;
    let cuts = chain.sample_cuts();
    // First verified witness per observed pair; otherwise the first failure.
    let mut found: BTreeMap<CofPair, (String, Check)> = BTreeMap::new();
    for cut in &cuts {
        let w = CutWitness::from_cut(&chain, cut, depth)?;
        let check = verify_witness(&chain, &w, depth);
        let entry = found.entry(w.claim.clone()).or_insert_with(|| (w.name.clone(), check.clone()));
        if !entry.1.passed() && check.passed() {
            *entry = (w.name, check);
        }
    }
    let mut lines = Vec::new();
    for pair in claimed.iter().chain(found.keys().filter(|p| !claimed.contains(p))) {
        let (witness, check) = match found.get(pair) {
            Some((n, c)) => (n.clone(), c.clone()),
            None => ("none".to_string(), Check::Fail("no sampled cut realises the pair".into())),
        };
        lines.push(PairLine { pair: pair.clone(), witness, depth, claimed: claimed.contains(pair), check });
    }
    Ok(SoundnessReport {
        cf: (t.cf()?, derive_cf(&chain, depth)?),
        ci: (t.ci()?, derive_ci(&chain, depth)?),
        chain,
        lines,
        sampled_cuts: cuts.len(),
    })
}
