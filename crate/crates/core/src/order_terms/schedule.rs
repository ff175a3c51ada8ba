use std::fmt;

use crate::cardinals::Card;
use crate::error::Result;

/// How a cardinal track advances from `ν` to `ν+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuccRule {
    Identity,
    Succ,
    DoubleSucc,
}

impl SuccRule {
    pub fn step(self) -> u64 {
        match self {
            SuccRule::Identity => 0,
            SuccRule::Succ => 1,
            SuccRule::DoubleSucc => 2,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            SuccRule::Identity => "id",
            SuccRule::Succ => "plus",
            SuccRule::DoubleSucc => "plusplus",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "id" => Some(SuccRule::Identity),
            "plus" => Some(SuccRule::Succ),
            "plusplus" => Some(SuccRule::DoubleSucc),
            _ => None,
        }
    }
}

/// `start` advanced `step·(n + offset)` times, for `n = 0, 1, 2, …`.
///
/// Every value of a schedule track along a run of consecutive successor
/// ordinals has this shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit {
    pub start: Card,
    pub step: u64,
    pub offset: u64,
}

impl Orbit {
    pub fn new(start: Card, rule: SuccRule, offset: u64) -> Self {
        Self { start, step: rule.step(), offset }
    }

    pub fn constant(value: Card) -> Self {
        Self { start: value, step: 0, offset: 0 }
    }

    pub fn at(&self, n: u64) -> Card {
        match &self.start {
            Card::One => Card::One,
            Card::Aleph(i) => Card::Aleph(i.add_finite(self.step * (n + self.offset))),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.step == 0
    }

    /// Finite tail of the index at `n = 0`; used to bound searches over `n`.
    pub fn finite_scale(&self) -> u64 {
        self.at(0).index().map(|i| i.finite_part()).unwrap_or(0)
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.step, self.offset) {
            (0, _) => write!(f, "{}", self.start),
            (s, 0) => write!(f, "succ^({s}n)({})", self.start),
            (s, o) => write!(f, "succ^({s}n+{})({})", s * o, self.start),
        }
    }
}

/// One cardinal track `ν ↦ κ_ν` for `0 < ν < μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Track {
    pub first: Card,
    pub rule: SuccRule,
    pub limit: Card,
}

impl Track {
    /// Value at the finite ordinal `n ≥ 1`.
    pub fn at_finite(&self, n: u64) -> Card {
        debug_assert!(n >= 1);
        Orbit::new(self.first.clone(), self.rule, 0).at(n - 1)
    }

    /// Value at `limit + m`.
    pub fn after_limit(&self, m: u64) -> Card {
        Orbit::new(self.limit.clone(), self.rule, 0).at(m)
    }

    /// Values at successor ordinals `1, 2, 3, …`.
    pub fn finite_orbit(&self, offset: u64) -> Orbit {
        Orbit::new(self.first.clone(), self.rule, offset)
    }

    /// Values at `λ, λ+1, λ+2, …` for a limit `λ`.
    pub fn limit_orbit(&self, offset: u64) -> Orbit {
        Orbit::new(self.limit.clone(), self.rule, offset)
    }
}

/// The pair of tracks `κ_ν`, `λ_ν` of the lexicographic construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CardinalSchedule {
    pub kappa: Track,
    pub lambda: Track,
}

impl CardinalSchedule {
    /// The standard choice: `κ_1 = μ`, `λ_1 = μ⁺`, double successors, and the
    /// same two values again at every limit.
    pub fn recipe(mu: &Card) -> Result<Self> {
        let mu_plus = mu.succ()?;
        Ok(Self {
            kappa: Track { first: mu.clone(), rule: SuccRule::DoubleSucc, limit: mu.clone() },
            lambda: Track { first: mu_plus.clone(), rule: SuccRule::DoubleSucc, limit: mu_plus },
        })
    }

    pub fn values(&self) -> impl Iterator<Item = &Card> {
        [&self.kappa.first, &self.kappa.limit, &self.lambda.first, &self.lambda.limit].into_iter()
    }

    /// `κ_ν` for the `ν`-th successor ordinal after `ν = 0`.
    pub fn kappa_at(&self, n: u64) -> Card {
        self.kappa.at_finite(n)
    }

    pub fn lambda_at(&self, n: u64) -> Card {
        self.lambda.at_finite(n)
    }

    /// Whether `κ_ν = λ_ν` happens for some successor ordinal `ν < μ`.
    /// Returns the offending value.
    pub fn diagonal_collision(&self, limits_exist: bool) -> Option<Card> {
        let finite = first_n(&self.kappa.finite_orbit(0), &self.lambda.finite_orbit(0), |a, b| a == b);
        if let Some(n) = finite {
            return Some(self.kappa.finite_orbit(0).at(n));
        }
        if limits_exist {
            let k = self.kappa.limit_orbit(1);
            let l = self.lambda.limit_orbit(1);
            if let Some(n) = first_n(&k, &l, |a, b| a == b) {
                return Some(k.at(n));
            }
        }
        None
    }
}

/// Smallest `n` with `pred(a(n), b(n))`, or `None`.
///
/// Orbit indices are affine in `n` with slopes in `{0,1,2}`, so any
/// comparison between two of them changes truth value at most once, and
/// does so before `n` exceeds the larger starting finite tail. Searching
/// slightly past that horizon is therefore exhaustive.
pub fn first_n(a: &Orbit, b: &Orbit, pred: impl Fn(&Card, &Card) -> bool) -> Option<u64> {
    let horizon = a.finite_scale().max(b.finite_scale()) + 4;
    (0..=horizon).find(|&n| pred(&a.at(n), &b.at(n)))
}

/// Like [`first_n`] but with one constant threshold folded into the horizon.
pub fn first_n_with(
    a: &Orbit,
    b: &Orbit,
    threshold: &Card,
    pred: impl Fn(&Card, &Card) -> bool,
) -> Option<u64> {
    let t = threshold.index().map(|i| i.finite_part()).unwrap_or(0);
    let horizon = a.finite_scale().max(b.finite_scale()).max(t) + 4;
    (0..=horizon).find(|&n| pred(&a.at(n), &b.at(n)))
}
