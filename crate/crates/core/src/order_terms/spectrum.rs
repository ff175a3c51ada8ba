//! Symbolic sets of cut cofinalities.
//!
//! A [`CutSpectrum`] is a finite union of families. Families range over
//! `CardSet`s or over the successor runs of a cardinal schedule, so they can
//! stand for infinitely many pairs. The queries the completeness predicates
//! need are answered on the families directly; [`CutSpectrum::pairs_below`]
//! materializes the finite part below a bound for comparisons and tests.

use std::collections::BTreeSet;
use std::fmt;

use super::phi::PhiMap;
use super::schedule::{first_n, first_n_with, Orbit};
use crate::cardinals::{Card, CardSet, CofPair};
use crate::error::{Error, Result};

/// Second coordinate of a range family as a function of the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PairMap {
    Const(Card),
    Phi(PhiMap),
}

impl PairMap {
    pub fn eval(&self, k: &Card) -> Result<Card> {
        match self {
            PairMap::Const(c) => Ok(c.clone()),
            PairMap::Phi(phi) => phi.eval(k),
        }
    }

    fn fixed_point_in(&self, s: &CardSet) -> Result<Option<Card>> {
        match self {
            PairMap::Const(c) => Ok(s.contains(c).then(|| c.clone())),
            PairMap::Phi(phi) => phi.fixed_point_in(s),
        }
    }

    fn replace_one(&self, with: &Card) -> PairMap {
        match self {
            PairMap::Const(Card::One) => PairMap::Const(with.clone()),
            other => other.clone(),
        }
    }

    fn yields_one(&self) -> bool {
        matches!(self, PairMap::Const(Card::One))
    }
}

impl fmt::Display for PairMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairMap::Const(c) => write!(f, "{c}"),
            PairMap::Phi(phi) => write!(f, "{phi}(k)"),
        }
    }
}

/// One coordinate of a ladder family at step `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rung {
    /// Exactly the orbit value.
    At(Orbit),
    /// Any infinite regular cardinal below the orbit value.
    Below(Orbit),
}

impl Rung {
    fn orbit(&self) -> &Orbit {
        match self {
            Rung::At(o) | Rung::Below(o) => o,
        }
    }

    fn values_at(&self, n: u64, limit: &Card) -> Result<Vec<Card>> {
        match self {
            Rung::At(o) => {
                let v = o.at(n);
                Ok(if v < *limit { vec![v] } else { vec![] })
            }
            Rung::Below(o) => CardSet::reg_below(&o.at(n)).members_below(limit),
        }
    }

    /// Can this rung take the value ℵ₀ at step `n`?
    fn admits_aleph0(&self, n: u64) -> bool {
        match self {
            Rung::At(o) => o.at(n) == Card::aleph0(),
            Rung::Below(o) => o.at(n) > Card::aleph0(),
        }
    }
}

impl fmt::Display for Rung {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rung::At(o) => write!(f, "{o}"),
            Rung::Below(o) => write!(f, "<{o}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Pair(CofPair),
    /// `{(κ, f(κ)) : κ ∈ S}`
    LeftRange { lefts: CardSet, map: PairMap },
    /// `{(f(λ), λ) : λ ∈ S}`
    RightRange { rights: CardSet, map: PairMap },
    /// `{(x, y) : n ≥ 0, x ∈ left(n), y ∈ right(n)}`
    Ladder { left: Rung, right: Rung },
}

/// Where a family came from. Only used for reporting, and to keep the
/// `ν = 1` diagonal row separately inspectable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Row {
    Declared,
    Principal,
    Boundary,
    FirstLevel,
    SuccessorBounded,
    DiagonalFirst,
    Diagonal,
    Limit,
    Refined,
    Block,
    TypeI,
    TypeII,
}

impl Row {
    pub fn name(self) -> &'static str {
        match self {
            Row::Declared => "declared",
            Row::Principal => "principal",
            Row::Boundary => "boundary",
            Row::FirstLevel => "first-level",
            Row::SuccessorBounded => "successor-bounded",
            Row::DiagonalFirst => "diagonal-first",
            Row::Diagonal => "diagonal",
            Row::Limit => "limit",
            Row::Refined => "refined",
            Row::Block => "block",
            Row::TypeI => "type-i",
            Row::TypeII => "type-ii",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    pub shape: Shape,
    /// Cuts in this family are realized (one side has an endpoint).
    pub principal: bool,
    pub row: Row,
}

impl Family {
    pub fn new(shape: Shape, row: Row) -> Self {
        let principal = match &shape {
            Shape::Pair(p) => p.is_principal(),
            Shape::LeftRange { map, .. } | Shape::RightRange { map, .. } => map.yields_one(),
            Shape::Ladder { .. } => false,
        };
        Self { shape, principal, row }
    }

    pub fn pair(left: Card, right: Card, row: Row) -> Self {
        Self::new(Shape::Pair(CofPair::new(left, right)), row)
    }

    pub fn is_empty(&self) -> bool {
        match &self.shape {
            Shape::Pair(_) => false,
            Shape::LeftRange { lefts: s, .. } | Shape::RightRange { rights: s, .. } => s.is_empty(),
            Shape::Ladder { left, right } => {
                // A `Below` rung has no members while its bound is at most ℵ₀.
                let live = |r: &Rung, c: &Card| matches!(r, Rung::At(_)) || *c > Card::aleph0();
                first_n_with(left.orbit(), right.orbit(), &Card::aleph(1), |x, y| {
                    live(left, x) && live(right, y)
                })
                .is_none()
            }
        }
    }

    pub fn mirrored(&self) -> Self {
        let shape = match &self.shape {
            Shape::Pair(p) => Shape::Pair(p.mirrored()),
            Shape::LeftRange { lefts, map } => Shape::RightRange { rights: lefts.clone(), map: map.clone() },
            Shape::RightRange { rights, map } => Shape::LeftRange { lefts: rights.clone(), map: map.clone() },
            Shape::Ladder { left, right } => Shape::Ladder { left: right.clone(), right: left.clone() },
        };
        Self { shape, principal: self.principal, row: self.row }
    }

    /// Replaces a `1` in the left coordinate by `left` and in the right
    /// coordinate by `right`, re-deriving the principal tag.
    pub fn replace_ones(&self, left: &Card, right: &Card, row: Row) -> Self {
        let fix = |c: &Card, with: &Card| if *c == Card::One { with.clone() } else { c.clone() };
        let shape = match &self.shape {
            Shape::Pair(p) => Shape::Pair(CofPair::new(fix(&p.left, left), fix(&p.right, right))),
            Shape::LeftRange { lefts, map } => {
                Shape::LeftRange { lefts: lefts.clone(), map: map.replace_one(right) }
            }
            Shape::RightRange { rights, map } => {
                Shape::RightRange { rights: rights.clone(), map: map.replace_one(left) }
            }
            ladder => ladder.clone(),
        };
        Family::new(shape, row)
    }

    /// All pairs in the family whose components are both at most ℵ₀.
    /// There are at most four such pairs, so this is exact.
    pub fn countable_pairs(&self) -> Result<BTreeSet<CofPair>> {
        let mut out = BTreeSet::new();
        let a0 = Card::aleph0();
        match &self.shape {
            Shape::Pair(p) => {
                if p.left.is_countable() && p.right.is_countable() {
                    out.insert(p.clone());
                }
            }
            Shape::LeftRange { lefts, map } => {
                if lefts.contains(&a0) {
                    let v = map.eval(&a0)?;
                    if v.is_countable() {
                        out.insert(CofPair::new(a0, v));
                    }
                }
            }
            Shape::RightRange { rights, map } => {
                if rights.contains(&a0) {
                    let v = map.eval(&a0)?;
                    if v.is_countable() {
                        out.insert(CofPair::new(v, a0));
                    }
                }
            }
            Shape::Ladder { left, right } => {
                let horizon = left.orbit().finite_scale().max(right.orbit().finite_scale()) + 6;
                if (0..=horizon).any(|n| left.admits_aleph0(n) && right.admits_aleph0(n)) {
                    out.insert(CofPair::new(a0.clone(), a0));
                }
            }
        }
        Ok(out)
    }

    /// Some pair `(κ, κ)` with `κ` infinite.
    pub fn infinite_symmetric_witness(&self) -> Result<Option<CofPair>> {
        let sym = |k: Card| CofPair::new(k.clone(), k);
        Ok(match &self.shape {
            Shape::Pair(p) => (p.left == p.right && p.left.is_infinite()).then(|| p.clone()),
            Shape::LeftRange { lefts: s, map } | Shape::RightRange { rights: s, map } => {
                map.fixed_point_in(s)?.map(sym)
            }
            Shape::Ladder { left, right } => {
                let (a, b) = (left.orbit(), right.orbit());
                match (left, right) {
                    (Rung::At(_), Rung::At(_)) => first_n(a, b, |x, y| x == y).map(|n| sym(a.at(n))),
                    (Rung::At(_), Rung::Below(_)) => {
                        first_n(a, b, |x, y| x < y).map(|n| sym(a.at(n)))
                    }
                    (Rung::Below(_), Rung::At(_)) => {
                        first_n(a, b, |x, y| y < x).map(|n| sym(b.at(n)))
                    }
                    (Rung::Below(_), Rung::Below(_)) => first_n_with(a, b, &Card::aleph(1), |x, y| {
                        *x > Card::aleph0() && *y > Card::aleph0()
                    })
                    .map(|_| sym(Card::aleph0())),
                }
            }
        })
    }

    /// Every pair of the family with both components strictly below `limit`.
    pub fn pairs_below(&self, limit: &Card) -> Result<BTreeSet<CofPair>> {
        let mut out = BTreeSet::new();
        let keep = |p: &CofPair| p.left < *limit && p.right < *limit;
        match &self.shape {
            Shape::Pair(p) => {
                if keep(p) {
                    out.insert(p.clone());
                }
            }
            Shape::LeftRange { lefts, map } => {
                for k in lefts.members_below(limit)? {
                    let p = CofPair::new(k.clone(), map.eval(&k)?);
                    if keep(&p) {
                        out.insert(p);
                    }
                }
            }
            Shape::RightRange { rights, map } => {
                for k in rights.members_below(limit)? {
                    let p = CofPair::new(map.eval(&k)?, k.clone());
                    if keep(&p) {
                        out.insert(p);
                    }
                }
            }
            Shape::Ladder { left, right } => {
                if !limit.index().map(|i| i.is_finite()).unwrap_or(true) {
                    return Err(Error::domain("ladder enumeration needs a finite aleph bound"));
                }
                let horizon = left.orbit().finite_scale().max(right.orbit().finite_scale())
                    + limit.index().map(|i| i.finite_part()).unwrap_or(0)
                    + 2;
                for n in 0..=horizon {
                    let xs = left.values_at(n, limit)?;
                    let ys = right.values_at(n, limit)?;
                    for x in &xs {
                        for y in &ys {
                            out.insert(CofPair::new(x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Pair(p) => write!(f, "{p}"),
            Shape::LeftRange { lefts, map } => write!(f, "{{(k,{map})|k<-{lefts}}}"),
            Shape::RightRange { rights, map } => write!(f, "{{({map},k)|k<-{rights}}}"),
            Shape::Ladder { left, right } => write!(f, "{{({left},{right})|n>=0}}"),
        }
    }
}

/// Finite union of cofinality families.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CutSpectrum {
    pub families: Vec<Family>,
}

impl CutSpectrum {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = CofPair>, row: Row) -> Self {
        let mut s = Self::empty();
        for p in pairs {
            s.push(Family::new(Shape::Pair(p), row));
        }
        s
    }

    pub fn push(&mut self, family: Family) {
        if !family.is_empty() && !self.families.contains(&family) {
            self.families.push(family);
        }
    }

    pub fn extend(&mut self, other: CutSpectrum) {
        for f in other.families {
            self.push(f);
        }
    }

    pub fn union(mut self, other: CutSpectrum) -> Self {
        self.extend(other);
        self
    }

    pub fn mirrored(&self) -> Self {
        let mut out = Self::empty();
        for f in &self.families {
            out.push(f.mirrored());
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn countable_pairs(&self) -> Result<BTreeSet<CofPair>> {
        let mut out = BTreeSet::new();
        for f in &self.families {
            out.extend(f.countable_pairs()?);
        }
        Ok(out)
    }

    pub fn infinite_symmetric_witness(&self) -> Result<Option<CofPair>> {
        for f in &self.families {
            if let Some(p) = f.infinite_symmetric_witness()? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// Some pair with `κ = λ`, if any.
    pub fn symmetric_witness(&self) -> Result<Option<CofPair>> {
        let one_one = CofPair::new(Card::One, Card::One);
        if self.countable_pairs()?.contains(&one_one) {
            return Ok(Some(one_one));
        }
        self.infinite_symmetric_witness()
    }

    /// Some pair that is not strongly asymmetric, if any.
    pub fn weak_witness(&self) -> Result<Option<CofPair>> {
        if let Some(p) = self.countable_pairs()?.into_iter().next() {
            return Ok(Some(p));
        }
        self.infinite_symmetric_witness()
    }

    /// Some symmetric pair among the nonprincipal families.
    pub fn nonprincipal_symmetric_witness(&self) -> Result<Option<CofPair>> {
        for f in self.families.iter().filter(|f| !f.principal) {
            if let Some(p) = f.infinite_symmetric_witness()? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    pub fn pairs_below(&self, limit: &Card) -> Result<BTreeSet<CofPair>> {
        let mut out = BTreeSet::new();
        for f in &self.families {
            out.extend(f.pairs_below(limit)?);
        }
        Ok(out)
    }

    /// Largest finite aleph index mentioned anywhere; sizes enumeration
    /// bounds that cover every interesting pair.
    pub fn finite_scale(&self) -> u64 {
        fn card_scale(c: &Card) -> u64 {
            c.index().map(|i| i.finite_part()).unwrap_or(0)
        }
        fn set_scale(s: &CardSet) -> u64 {
            let seg = card_scale(&s.segment_bound());
            s.isolated().map(|c| card_scale(&c)).fold(seg, u64::max)
        }
        fn map_scale(m: &PairMap) -> u64 {
            match m {
                PairMap::Const(c) => card_scale(c),
                PairMap::Phi(phi) => {
                    let t = phi.table.iter().map(|(k, v)| card_scale(k).max(card_scale(v)));
                    let d = match &phi.default {
                        Some(super::phi::PhiDefault::Const(c)) => card_scale(c),
                        _ => 0,
                    };
                    t.fold(d, u64::max)
                }
            }
        }
        self.families
            .iter()
            .map(|f| match &f.shape {
                Shape::Pair(p) => card_scale(&p.left).max(card_scale(&p.right)),
                Shape::LeftRange { lefts: s, map } | Shape::RightRange { rights: s, map } => {
                    set_scale(s).max(map_scale(map))
                }
                Shape::Ladder { left, right } => {
                    left.orbit().finite_scale().max(right.orbit().finite_scale())
                }
            })
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for CutSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.families.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, fam) in self.families.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{fam}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order_terms::schedule::SuccRule;

    fn a(n: u64) -> Card {
        Card::aleph(n)
    }

    #[test]
    fn ladder_queries_match_enumeration() {
        // (κ_{n+1}, λ) with λ < λ_n for κ_n = ℵ_{2+2n}, λ_n = ℵ_{3+2n}.
        let fam = Family::new(
            Shape::Ladder {
                left: Rung::At(Orbit::new(a(2), SuccRule::DoubleSucc, 1)),
                right: Rung::Below(Orbit::new(a(3), SuccRule::DoubleSucc, 0)),
            },
            Row::SuccessorBounded,
        );
        let pairs = fam.pairs_below(&a(7)).unwrap();
        assert!(pairs.contains(&CofPair::new(a(4), a(0))));
        assert!(pairs.contains(&CofPair::new(a(4), a(2))));
        assert!(!pairs.contains(&CofPair::new(a(4), a(3))));
        assert!(pairs.contains(&CofPair::new(a(6), a(4))));
        // κ_{n+1} = ℵ_{4+2n} is never below λ_n = ℵ_{3+2n}.
        assert_eq!(fam.infinite_symmetric_witness().unwrap(), None);
        assert!(pairs.iter().all(|p| p.left != p.right));
    }

    #[test]
    fn below_below_ladder_is_symmetric_once_uncountable() {
        let fam = Family::new(
            Shape::Ladder {
                left: Rung::Below(Orbit::new(a(0), SuccRule::Succ, 0)),
                right: Rung::Below(Orbit::new(a(0), SuccRule::Succ, 0)),
            },
            Row::SuccessorBounded,
        );
        assert_eq!(
            fam.infinite_symmetric_witness().unwrap(),
            Some(CofPair::new(a(0), a(0)))
        );
    }

    #[test]
    fn mirror_swaps_every_pair() {
        let fam = Family::new(
            Shape::LeftRange { lefts: CardSet::reg_below(&a(3)), map: PairMap::Const(Card::One) },
            Row::Declared,
        );
        assert!(fam.principal);
        let m = fam.mirrored().pairs_below(&a(5)).unwrap();
        let back: BTreeSet<_> = fam.pairs_below(&a(5)).unwrap().iter().map(|p| p.mirrored()).collect();
        assert_eq!(m, back);
    }
}
