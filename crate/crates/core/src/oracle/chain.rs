use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Countable order with decidable comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConcreteChain {
    Nat,
    Int,
    Rat,
    /// `{0 < … < n-1}` with `n ≥ 1`.
    Finite(u64),
    Rev(Box<ConcreteChain>),
    Sum(Box<ConcreteChain>, Box<ConcreteChain>),
    /// Outer factor most significant.
    Lex(Box<ConcreteChain>, Box<ConcreteChain>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Num(BigRational),
    Left(Box<Elem>),
    Right(Box<Elem>),
    Pair(Box<Elem>, Box<Elem>),
}

impl Elem {
    pub fn int(n: i64) -> Self {
        Elem::Num(BigRational::from_integer(n.into()))
    }

    pub fn num(&self) -> Option<&BigRational> {
        match self {
            Elem::Num(r) => Some(r),
            _ => None,
        }
    }

    fn left(e: Elem) -> Self {
        Elem::Left(Box::new(e))
    }

    fn right(e: Elem) -> Self {
        Elem::Right(Box::new(e))
    }

    pub(crate) fn pair(a: Elem, b: Elem) -> Self {
        Elem::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Num(r) => crate::hahn_concrete::chain::write_rational(f, r),
            Elem::Left(e) => write!(f, "L{e}"),
            Elem::Right(e) => write!(f, "R{e}"),
            Elem::Pair(a, b) => write!(f, "<{a},{b}>"),
        }
    }
}

fn one() -> BigRational {
    BigRational::one()
}

impl ConcreteChain {
    pub fn rev(c: ConcreteChain) -> Self {
        match c {
            ConcreteChain::Rev(inner) => *inner,
            c => ConcreteChain::Rev(Box::new(c)),
        }
    }

    pub fn sum(a: ConcreteChain, b: ConcreteChain) -> Self {
        ConcreteChain::Sum(Box::new(a), Box::new(b))
    }

    pub fn lex(a: ConcreteChain, b: ConcreteChain) -> Self {
        ConcreteChain::Lex(Box::new(a), Box::new(b))
    }

    pub fn contains(&self, e: &Elem) -> bool {
        match (self, e) {
            (ConcreteChain::Nat, Elem::Num(r)) => r.is_integer() && *r >= BigRational::from_integer(0.into()),
            (ConcreteChain::Int, Elem::Num(r)) => r.is_integer(),
            (ConcreteChain::Rat, Elem::Num(_)) => true,
            (ConcreteChain::Finite(n), Elem::Num(r)) => {
                r.is_integer() && *r >= BigRational::from_integer(0.into()) && *r < BigRational::from_integer((*n).into())
            }
            (ConcreteChain::Rev(c), e) => c.contains(e),
            (ConcreteChain::Sum(a, _), Elem::Left(x)) => a.contains(x),
            (ConcreteChain::Sum(_, b), Elem::Right(y)) => b.contains(y),
            (ConcreteChain::Lex(a, b), Elem::Pair(x, y)) => a.contains(x) && b.contains(y),
            _ => false,
        }
    }

    pub fn require(&self, e: &Elem) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::domain(format!("{e} is not an element of {self}")))
        }
    }

    /// Comparison of two members.
    pub fn cmp(&self, x: &Elem, y: &Elem) -> Ordering {
        match (self, x, y) {
            (ConcreteChain::Rev(c), x, y) => c.cmp(y, x),
            (_, Elem::Num(a), Elem::Num(b)) => a.cmp(b),
            (ConcreteChain::Sum(a, _), Elem::Left(p), Elem::Left(q)) => a.cmp(p, q),
            (ConcreteChain::Sum(_, b), Elem::Right(p), Elem::Right(q)) => b.cmp(p, q),
            (ConcreteChain::Sum(..), Elem::Left(_), Elem::Right(_)) => Ordering::Less,
            (ConcreteChain::Sum(..), Elem::Right(_), Elem::Left(_)) => Ordering::Greater,
            (ConcreteChain::Lex(a, b), Elem::Pair(x1, y1), Elem::Pair(x2, y2)) => {
                a.cmp(x1, x2).then_with(|| b.cmp(y1, y2))
            }
            _ => panic!("comparing elements of different shapes"),
        }
    }

    pub fn lt(&self, x: &Elem, y: &Elem) -> bool {
        self.cmp(x, y) == Ordering::Less
    }

    /// Some member, used to fill lower factors of pairs.
    pub fn sample(&self) -> Elem {
        match self {
            ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Rat | ConcreteChain::Finite(_) => Elem::int(0),
            ConcreteChain::Rev(c) => c.sample(),
            ConcreteChain::Sum(a, _) => Elem::left(a.sample()),
            ConcreteChain::Lex(a, b) => Elem::pair(a.sample(), b.sample()),
        }
    }

    pub fn min(&self) -> Option<Elem> {
        match self {
            ConcreteChain::Nat | ConcreteChain::Finite(_) => Some(Elem::int(0)),
            ConcreteChain::Int | ConcreteChain::Rat => None,
            ConcreteChain::Rev(c) => c.max(),
            ConcreteChain::Sum(a, _) => a.min().map(Elem::left),
            ConcreteChain::Lex(a, b) => Some(Elem::pair(a.min()?, b.min()?)),
        }
    }

    pub fn max(&self) -> Option<Elem> {
        match self {
            ConcreteChain::Finite(n) => Some(Elem::int(*n as i64 - 1)),
            ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Rat => None,
            ConcreteChain::Rev(c) => c.min(),
            ConcreteChain::Sum(_, b) => b.max().map(Elem::right),
            ConcreteChain::Lex(a, b) => Some(Elem::pair(a.max()?, b.max()?)),
        }
    }

    pub fn is_max(&self, e: &Elem) -> bool {
        self.max().as_ref() == Some(e)
    }

    pub fn is_min(&self, e: &Elem) -> bool {
        self.min().as_ref() == Some(e)
    }

    /// Immediate successor.
    pub fn succ(&self, e: &Elem) -> Option<Elem> {
        match (self, e) {
            (ConcreteChain::Nat | ConcreteChain::Int, Elem::Num(r)) => Some(Elem::Num(r + one())),
            (ConcreteChain::Finite(_), Elem::Num(r)) => {
                (!self.is_max(e)).then(|| Elem::Num(r + one()))
            }
            (ConcreteChain::Rat, _) => None,
            (ConcreteChain::Rev(c), e) => c.pred(e),
            (ConcreteChain::Sum(a, b), Elem::Left(x)) => match a.succ(x) {
                Some(s) => Some(Elem::left(s)),
                None if a.is_max(x) => b.min().map(Elem::right),
                None => None,
            },
            (ConcreteChain::Sum(_, b), Elem::Right(y)) => b.succ(y).map(Elem::right),
            (ConcreteChain::Lex(a, b), Elem::Pair(x, y)) => match b.succ(y) {
                Some(s) => Some(Elem::pair((**x).clone(), s)),
                None if b.is_max(y) => Some(Elem::pair(a.succ(x)?, b.min()?)),
                None => None,
            },
            _ => None,
        }
    }

    /// Immediate predecessor.
    pub fn pred(&self, e: &Elem) -> Option<Elem> {
        match (self, e) {
            (ConcreteChain::Int, Elem::Num(r)) => Some(Elem::Num(r - one())),
            (ConcreteChain::Nat | ConcreteChain::Finite(_), Elem::Num(r)) => {
                (!self.is_min(e)).then(|| Elem::Num(r - one()))
            }
            (ConcreteChain::Rat, _) => None,
            (ConcreteChain::Rev(c), e) => c.succ(e),
            (ConcreteChain::Sum(_, b), Elem::Right(y)) => match b.pred(y) {
                Some(p) => Some(Elem::right(p)),
                None if b.is_min(y) => self_max_left(self),
                None => None,
            },
            (ConcreteChain::Sum(a, _), Elem::Left(x)) => a.pred(x).map(Elem::left),
            (ConcreteChain::Lex(a, b), Elem::Pair(x, y)) => match b.pred(y) {
                Some(p) => Some(Elem::pair((**x).clone(), p)),
                None if b.is_min(y) => Some(Elem::pair(a.pred(x)?, b.max()?)),
                None => None,
            },
            _ => None,
        }
    }

    /// Some member strictly above `e`.
    pub fn above(&self, e: &Elem) -> Option<Elem> {
        match (self, e) {
            (ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Rat, Elem::Num(r)) => Some(Elem::Num(r + one())),
            (ConcreteChain::Finite(_), _) => self.succ(e),
            (ConcreteChain::Rev(c), e) => c.below(e),
            (ConcreteChain::Sum(a, b), Elem::Left(x)) => {
                a.above(x).map(Elem::left).or_else(|| Some(Elem::right(b.sample())))
            }
            (ConcreteChain::Sum(_, b), Elem::Right(y)) => b.above(y).map(Elem::right),
            (ConcreteChain::Lex(a, b), Elem::Pair(x, y)) => match b.above(y) {
                Some(z) => Some(Elem::pair((**x).clone(), z)),
                None => Some(Elem::pair(a.above(x)?, b.sample())),
            },
            _ => None,
        }
    }

    /// Some member strictly below `e`.
    pub fn below(&self, e: &Elem) -> Option<Elem> {
        match (self, e) {
            (ConcreteChain::Int | ConcreteChain::Rat, Elem::Num(r)) => Some(Elem::Num(r - one())),
            (ConcreteChain::Nat | ConcreteChain::Finite(_), _) => self.pred(e),
            (ConcreteChain::Rev(c), e) => c.above(e),
            (ConcreteChain::Sum(a, b), Elem::Right(y)) => {
                b.below(y).map(Elem::right).or_else(|| Some(Elem::left(a.sample())))
            }
            (ConcreteChain::Sum(a, _), Elem::Left(x)) => a.below(x).map(Elem::left),
            (ConcreteChain::Lex(a, b), Elem::Pair(x, y)) => match b.below(y) {
                Some(z) => Some(Elem::pair((**x).clone(), z)),
                None => Some(Elem::pair(a.below(x)?, b.sample())),
            },
            _ => None,
        }
    }

    /// Some member strictly between `x < y`.
    pub fn between(&self, x: &Elem, y: &Elem) -> Option<Elem> {
        match (self, x, y) {
            (ConcreteChain::Rat, Elem::Num(a), Elem::Num(b)) => {
                Some(Elem::Num((a + b) / BigRational::from_integer(2.into())))
            }
            (ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Finite(_), Elem::Num(a), Elem::Num(b)) => {
                let s = a + one();
                (s < *b).then_some(Elem::Num(s))
            }
            (ConcreteChain::Rev(c), x, y) => c.between(y, x),
            (ConcreteChain::Sum(a, _), Elem::Left(p), Elem::Left(q)) => a.between(p, q).map(Elem::left),
            (ConcreteChain::Sum(_, b), Elem::Right(p), Elem::Right(q)) => b.between(p, q).map(Elem::right),
            (ConcreteChain::Sum(a, b), Elem::Left(p), Elem::Right(q)) => {
                a.above(p).map(Elem::left).or_else(|| b.below(q).map(Elem::right))
            }
            (ConcreteChain::Lex(a, b), Elem::Pair(x1, y1), Elem::Pair(x2, y2)) => {
                if x1 == x2 {
                    return b.between(y1, y2).map(|z| Elem::pair((**x1).clone(), z));
                }
                if let Some(z) = b.above(y1) {
                    return Some(Elem::pair((**x1).clone(), z));
                }
                if let Some(z) = b.below(y2) {
                    return Some(Elem::pair((**x2).clone(), z));
                }
                a.between(x1, x2).map(|m| Elem::pair(m, b.sample()))
            }
            _ => None,
        }
    }
}

fn self_max_left(c: &ConcreteChain) -> Option<Elem> {
    match c {
        ConcreteChain::Sum(a, _) => a.max().map(Elem::left),
        _ => None,
    }
}

impl fmt::Display for ConcreteChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConcreteChain::Nat => write!(f, "nat"),
            ConcreteChain::Int => write!(f, "int"),
            ConcreteChain::Rat => write!(f, "rat"),
            ConcreteChain::Finite(n) => write!(f, "fin({n})"),
            ConcreteChain::Rev(c) => write!(f, "rev({c})"),
            ConcreteChain::Sum(a, b) => write!(f, "sum({a},{b})"),
            ConcreteChain::Lex(a, b) => write!(f, "lex({a},{b})"),
        }
    }
}
