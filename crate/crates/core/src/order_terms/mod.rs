//! Term language for linear orders and the attributes computed from it.
//!
//! Every attribute is a structural fold over the term. Atoms carry their
//! attributes as declarations; the analyzer never looks inside them.

mod analysis;
mod construct;
pub mod phi;
pub mod schedule;
pub mod spectrum;

use std::fmt;

pub use analysis::{Completeness, ConditionCheck, Predicates};
pub use construct::{extend_order, extend_order_with, Extension};
pub use phi::{PhiDefault, PhiMap};
pub use schedule::{CardinalSchedule, Orbit, SuccRule, Track};
pub use spectrum::{CutSpectrum, Family, PairMap, Row, Rung, Shape};

use crate::cardinals::{Card, CardSet, CofPair, OrdinalIndex};
use crate::error::{Error, Result};
use crate::struct_classify::GroupDescriptor;

/// Declared attributes of an opaque order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomDecl {
    pub name: String,
    pub cf: Card,
    pub ci: Card,
    pub coin: CardSet,
    pub cofin: CardSet,
    pub card: Option<Card>,
    /// Optional declared cut spectrum, as explicit pairs.
    pub cuts: Option<Vec<CofPair>>,
}

impl AtomDecl {
    pub fn new(name: impl Into<String>, cf: Card, ci: Card) -> Self {
        Self {
            name: name.into(),
            cf,
            ci,
            coin: CardSet::empty(),
            cofin: CardSet::empty(),
            card: None,
            cuts: None,
        }
    }

    pub fn coin(mut self, s: CardSet) -> Self {
        self.coin = s;
        self
    }

    pub fn cofin(mut self, s: CardSet) -> Self {
        self.cofin = s;
        self
    }

    pub fn card(mut self, k: Card) -> Self {
        self.card = Some(k);
        self
    }

    pub fn cuts(mut self, cuts: Vec<CofPair>) -> Self {
        self.cuts = Some(cuts);
        self
    }
}

/// The first lexicographic construction: `I_0 = λ₀* + I^c + κ₀`,
/// `I_ν = λ_ν* + κ_ν` for `0 < ν < μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexSchedule {
    pub mu: Card,
    pub base: OrderTerm,
    pub k0: Card,
    pub l0: Card,
    pub schedule: CardinalSchedule,
    /// Declared bound on the cardinality of the result.
    pub card: Option<Card>,
}

impl LexSchedule {
    /// Limit ordinals below `μ` exist exactly when `μ > ℵ₀`.
    pub fn has_limits(&self) -> bool {
        self.mu.is_uncountable()
    }
}

/// The refined construction driven by two maps `φl`, `φr`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexRefined {
    pub mu: Card,
    pub base: OrderTerm,
    pub k0: Card,
    pub l0: Card,
    pub phil: PhiMap,
    pub phir: PhiMap,
    /// Size standing in for the class of all ordinals, if given.
    pub on: Option<Card>,
    pub card: Option<Card>,
}

impl LexRefined {
    /// `Cofin(I) ∪ Reg_{<κ₀} ∪ Reg_{<μ}`
    pub fn rl(&self) -> Result<CardSet> {
        let (_, cofin) = self.base.coin_cofin()?;
        Ok(cofin.union(&CardSet::reg_below(&self.k0)).union(&CardSet::reg_below(&self.mu)))
    }

    /// `Coin(I) ∪ Reg_{<λ₀} ∪ Reg_{<μ}`
    pub fn rr(&self) -> Result<CardSet> {
        let (coin, _) = self.base.coin_cofin()?;
        Ok(coin.union(&CardSet::reg_below(&self.l0)).union(&CardSet::reg_below(&self.mu)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderTerm {
    Empty,
    Finite(u64),
    Well(Card),
    Rev(Box<OrderTerm>),
    Sum(Box<OrderTerm>, Box<OrderTerm>),
    Completion(Box<OrderTerm>),
    /// `outer × inner` ordered lexicographically with the outer factor
    /// most significant: every point of `outer` is replaced by a copy of
    /// `inner`.
    Lex(Box<OrderTerm>, Box<OrderTerm>),
    Atom(Box<AtomDecl>),
    LexSchedule(Box<LexSchedule>),
    LexRefined(Box<LexRefined>),
    /// The underlying order of an ordered abelian group.
    Group(Box<GroupDescriptor>),
}

impl OrderTerm {
    pub fn finite(n: u64) -> Self {
        if n == 0 {
            OrderTerm::Empty
        } else {
            OrderTerm::Finite(n)
        }
    }

    pub fn well(k: Card) -> Result<Self> {
        k.require_reg_infinite()?;
        Ok(OrderTerm::Well(k))
    }

    pub fn rev(t: OrderTerm) -> Self {
        match t {
            OrderTerm::Rev(inner) => *inner,
            OrderTerm::Empty => OrderTerm::Empty,
            OrderTerm::Finite(n) => OrderTerm::Finite(n),
            t => OrderTerm::Rev(Box::new(t)),
        }
    }

    pub fn sum(a: OrderTerm, b: OrderTerm) -> Self {
        match (a, b) {
            (OrderTerm::Empty, b) => b,
            (a, OrderTerm::Empty) => a,
            (OrderTerm::Finite(m), OrderTerm::Finite(n)) => OrderTerm::Finite(m + n),
            (a, b) => OrderTerm::Sum(Box::new(a), Box::new(b)),
        }
    }

    pub fn completion(t: OrderTerm) -> Self {
        match t {
            OrderTerm::Empty => OrderTerm::Empty,
            t => OrderTerm::Completion(Box::new(t)),
        }
    }

    pub fn lex(outer: OrderTerm, inner: OrderTerm) -> Self {
        match (outer, inner) {
            (OrderTerm::Empty, _) | (_, OrderTerm::Empty) => OrderTerm::Empty,
            (OrderTerm::Finite(1), t) | (t, OrderTerm::Finite(1)) => t,
            (OrderTerm::Finite(m), OrderTerm::Finite(n)) => OrderTerm::Finite(m * n),
            (a, b) => OrderTerm::Lex(Box::new(a), Box::new(b)),
        }
    }

    pub fn atom(decl: AtomDecl) -> Result<Self> {
        decl.cf.require_regular()?;
        decl.ci.require_regular()?;
        if let Some(c) = &decl.card {
            if !c.is_infinite() {
                return Err(Error::domain(format!("atom {}: card bound must be an aleph", decl.name)));
            }
        }
        for p in decl.cuts.iter().flatten() {
            if !p.is_regular() {
                return Err(Error::NotRegular(p.to_string()));
            }
        }
        let t = OrderTerm::Atom(Box::new(decl));
        t.check_declared_card()?;
        Ok(t)
    }

    pub fn lex_schedule(s: LexSchedule) -> Result<Self> {
        s.mu.require_reg_infinite()?;
        s.k0.require_reg_infinite()?;
        s.l0.require_reg_infinite()?;
        for v in s.schedule.values() {
            v.require_reg_infinite()?;
        }
        let t = OrderTerm::LexSchedule(Box::new(s));
        t.check_declared_card()?;
        Ok(t)
    }

    pub fn lex_refined(r: LexRefined) -> Result<Self> {
        r.mu.require_reg_infinite()?;
        r.k0.require_reg_infinite()?;
        r.l0.require_reg_infinite()?;
        r.phil.validate()?;
        r.phir.validate()?;
        if let Some(on) = &r.on {
            on.require_reg_infinite()?;
        }
        let t = OrderTerm::LexRefined(Box::new(r));
        t.check_declared_card()?;
        Ok(t)
    }

    /// A declared cardinality bound must dominate every cofinality the
    /// order is known to carry.
    fn check_declared_card(&self) -> Result<()> {
        let Some(card) = self.card_bound() else { return Ok(()) };
        let cap = CardSet::at_most(&card);
        let mut seen = vec![self.cf()?, self.ci()?];
        if let OrderTerm::Atom(a) = self {
            for p in a.cuts.iter().flatten() {
                seen.extend([p.left.clone(), p.right.clone()]);
            }
        }
        if let Some(k) = seen.iter().find(|k| k.is_infinite() && !cap.contains(k)) {
            return Err(Error::InvalidDescriptor(format!("{k} exceeds the declared bound card<={card}")));
        }
        if let Ok((coin, cofin)) = self.coin_cofin() {
            if !coin.union(&cofin).is_subset(&cap) {
                return Err(Error::InvalidDescriptor(format!(
                    "Coin/Cofin {} exceed the declared bound card<={card}",
                    coin.union(&cofin)
                )));
            }
        }
        Ok(())
    }

    pub fn group(g: GroupDescriptor) -> Self {
        OrderTerm::Group(Box::new(g))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, OrderTerm::Empty)
    }

    /// Cofinality. `1` means a largest element exists.
    pub fn cf(&self) -> Result<Card> {
        Ok(match self {
            OrderTerm::Empty => return Err(Error::EmptyOrder),
            OrderTerm::Finite(_) => Card::One,
            OrderTerm::Well(k) => k.clone(),
            OrderTerm::Rev(t) => t.ci()?,
            OrderTerm::Sum(a, b) => {
                if b.is_empty() {
                    a.cf()?
                } else {
                    b.cf()?
                }
            }
            OrderTerm::Completion(t) => t.cf()?,
            OrderTerm::Lex(outer, inner) => match outer.cf()? {
                Card::One => inner.cf()?,
                k => k,
            },
            OrderTerm::Atom(a) => a.cf.clone(),
            OrderTerm::LexSchedule(s) => s.k0.clone(),
            OrderTerm::LexRefined(r) => r.k0.clone(),
            OrderTerm::Group(g) => g.cf_group_or_one()?,
        })
    }

    /// Coinitiality. `1` means a least element exists.
    pub fn ci(&self) -> Result<Card> {
        Ok(match self {
            OrderTerm::Empty => return Err(Error::EmptyOrder),
            OrderTerm::Finite(_) | OrderTerm::Well(_) => Card::One,
            OrderTerm::Rev(t) => t.cf()?,
            OrderTerm::Sum(a, b) => {
                if a.is_empty() {
                    b.ci()?
                } else {
                    a.ci()?
                }
            }
            OrderTerm::Completion(t) => t.ci()?,
            OrderTerm::Lex(outer, inner) => match outer.ci()? {
                Card::One => inner.ci()?,
                k => k,
            },
            OrderTerm::Atom(a) => a.ci.clone(),
            OrderTerm::LexSchedule(s) => s.l0.clone(),
            OrderTerm::LexRefined(r) => r.l0.clone(),
            // x ↦ -x reverses a group, so cofinality and coinitiality agree.
            OrderTerm::Group(g) => g.cf_group_or_one()?,
        })
    }

    /// `(Coin, Cofin)`: the infinite coinitialities and cofinalities of
    /// subsets.
    pub fn coin_cofin(&self) -> Result<(CardSet, CardSet)> {
        Ok(match self {
            OrderTerm::Empty | OrderTerm::Finite(_) => (CardSet::empty(), CardSet::empty()),
            OrderTerm::Well(k) => (CardSet::empty(), CardSet::at_most(k)),
            OrderTerm::Rev(t) => {
                let (coin, cofin) = t.coin_cofin()?;
                (cofin, coin)
            }
            OrderTerm::Sum(a, b) | OrderTerm::Lex(a, b) => {
                let (ca, fa) = a.coin_cofin()?;
                let (cb, fb) = b.coin_cofin()?;
                (ca.union(&cb), fa.union(&fb))
            }
            OrderTerm::Completion(t) => t.coin_cofin()?,
            OrderTerm::Atom(a) => (a.coin.clone(), a.cofin.clone()),
            OrderTerm::LexSchedule(s) => schedule_coin_cofin(s)?,
            OrderTerm::LexRefined(r) => {
                let cofin = r.rl()?.insert(&r.mu)?.insert(&r.k0)?;
                let coin = r.rr()?.insert(&r.mu)?.insert(&r.l0)?;
                (coin, cofin)
            }
            OrderTerm::Group(_) => {
                return Err(Error::not_derivable("Coin/Cofin of a group's underlying order"))
            }
        })
    }

    /// Declared or computed upper bound on the cardinality.
    pub fn card_bound(&self) -> Option<Card> {
        match self {
            OrderTerm::Empty | OrderTerm::Finite(_) => Some(Card::aleph0()),
            OrderTerm::Well(k) => Some(k.clone()),
            OrderTerm::Rev(t) => t.card_bound(),
            OrderTerm::Sum(a, b) | OrderTerm::Lex(a, b) => Some(a.card_bound()?.max(b.card_bound()?)),
            OrderTerm::Completion(_) | OrderTerm::Group(_) => None,
            OrderTerm::Atom(a) => a.card.clone(),
            OrderTerm::LexSchedule(s) => s.card.clone(),
            OrderTerm::LexRefined(r) => r.card.clone(),
        }
    }

    /// The order with its largest element removed.
    pub fn drop_max(&self) -> Result<OrderTerm> {
        match self {
            OrderTerm::Finite(n) => Ok(OrderTerm::finite(n - 1)),
            OrderTerm::Sum(a, b) => Ok(OrderTerm::sum((**a).clone(), b.drop_max()?)),
            OrderTerm::Rev(t) => Ok(OrderTerm::rev(t.drop_min()?)),
            t if t.cf().ok() != Some(Card::One) => {
                Err(Error::domain(format!("{t} has no largest element")))
            }
            t => Err(Error::not_derivable(format!("removing the largest element of {t}"))),
        }
    }

    /// The order with its least element removed.
    pub fn drop_min(&self) -> Result<OrderTerm> {
        match self {
            OrderTerm::Finite(n) => Ok(OrderTerm::finite(n - 1)),
            OrderTerm::Sum(a, b) => Ok(OrderTerm::sum(a.drop_min()?, (**b).clone())),
            OrderTerm::Rev(t) => Ok(OrderTerm::rev(t.drop_max()?)),
            t if t.ci().ok() != Some(Card::One) => {
                Err(Error::domain(format!("{t} has no least element")))
            }
            t => Err(Error::not_derivable(format!("removing the least element of {t}"))),
        }
    }
}

/// Cofin of a schedule construction: all infinite left components of cuts,
/// together with the cofinality of the whole order. Coin is symmetric.
fn schedule_coin_cofin(s: &LexSchedule) -> Result<(CardSet, CardSet)> {
    let (coin_i, cofin_i) = s.base.coin_cofin()?;
    let side = |track: &Track, base: CardSet, zero: &Card| -> Result<CardSet> {
        let mut out = base
            .union(&CardSet::reg_below(zero))
            .insert(&s.mu)?
            .insert(zero)?
            .union(&orbit_hull(&track.first, track.rule)?);
        if s.has_limits() {
            out = out
                .union(&CardSet::reg_below(&s.mu))
                .union(&orbit_hull(&track.limit, track.rule)?);
        }
        Ok(out)
    };
    Ok((side(&s.schedule.lambda, coin_i, &s.l0)?, side(&s.schedule.kappa, cofin_i, &s.k0)?))
}

/// Every value of a track run together with every infinite regular
/// cardinal below one of them.
fn orbit_hull(start: &Card, rule: SuccRule) -> Result<CardSet> {
    let Card::Aleph(i) = start else {
        return Err(Error::domain("schedule values must be infinite"));
    };
    Ok(match rule {
        SuccRule::Identity => CardSet::at_most(start),
        _ => CardSet::reg_below(&Card::Aleph(i.add(&OrdinalIndex::omega()))),
    })
}

fn write_card_set(f: &mut fmt::Formatter<'_>, s: &CardSet) -> fmt::Result {
    write!(f, "{s}")
}

impl fmt::Display for AtomDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "atom({}; cf={}; ci={}; coin=", self.name, self.cf, self.ci)?;
        write_card_set(f, &self.coin)?;
        write!(f, "; cofin=")?;
        write_card_set(f, &self.cofin)?;
        if let Some(c) = &self.card {
            write!(f, "; card<={c}")?;
        }
        if let Some(cuts) = &self.cuts {
            write!(f, "; cuts={{")?;
            for (i, p) in cuts.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Empty => write!(f, "empty"),
            OrderTerm::Finite(n) => write!(f, "fin({n})"),
            OrderTerm::Well(k) => write!(f, "well({k})"),
            OrderTerm::Rev(t) => write!(f, "rev({t})"),
            OrderTerm::Sum(a, b) => write!(f, "sum({a},{b})"),
            OrderTerm::Completion(t) => write!(f, "comp({t})"),
            OrderTerm::Lex(a, b) => write!(f, "lex({a},{b})"),
            OrderTerm::Atom(a) => write!(f, "{a}"),
            OrderTerm::LexSchedule(s) => {
                let (k, l) = (&s.schedule.kappa, &s.schedule.lambda);
                write!(f, "lexsched(mu={}; base={}; k0={}; l0={}", s.mu, s.base, s.k0, s.l0)?;
                write!(f, "; k1={}; l1={}", k.first, l.first)?;
                write!(f, "; ksucc={}; lsucc={}", k.rule.keyword(), l.rule.keyword())?;
                write!(f, "; klim={}; llim={}", k.limit, l.limit)?;
                if let Some(c) = &s.card {
                    write!(f, "; card<={c}")?;
                }
                write!(f, ")")
            }
            OrderTerm::LexRefined(r) => {
                write!(f, "lexref(mu={}; base={}; k0={}; l0={}", r.mu, r.base, r.k0, r.l0)?;
                write!(f, "; phil={}; phir={}", r.phil, r.phir)?;
                if let Some(on) = &r.on {
                    write!(f, "; on={on}")?;
                }
                if let Some(c) = &r.card {
                    write!(f, "; card<={c}")?;
                }
                write!(f, ")")
            }
            OrderTerm::Group(g) => write!(f, "order({g})"),
        }
    }
}
