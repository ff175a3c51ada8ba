use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// A concrete decidable linear order used as an index set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexChain {
    /// `{0 < 1 < … < n-1}`
    Finite(u64),
    Integers,
    Rationals,
    /// Tuples ordered lexicographically.
    Lex(Vec<IndexChain>),
}

/// An element of an [`IndexChain`]. Points of one chain compare by the
/// chain's order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Nat(u64),
    Int(BigInt),
    Rat(BigRational),
    Tuple(Vec<Point>),
}

impl IndexChain {
    pub fn contains(&self, p: &Point) -> bool {
        match (self, p) {
            (IndexChain::Finite(n), Point::Nat(i)) => i < n,
            (IndexChain::Integers, Point::Int(_)) => true,
            (IndexChain::Rationals, Point::Rat(_)) => true,
            (IndexChain::Lex(cs), Point::Tuple(ps)) => {
                cs.len() == ps.len() && cs.iter().zip(ps).all(|(c, p)| c.contains(p))
            }
            _ => false,
        }
    }

    pub fn require(&self, p: &Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::domain(format!("{p} is not a point of {self}")))
        }
    }

    pub fn keyword(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IndexChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexChain::Finite(n) => write!(f, "fin({n})"),
            IndexChain::Integers => write!(f, "int"),
            IndexChain::Rationals => write!(f, "rat"),
            IndexChain::Lex(cs) => {
                write!(f, "lex(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

pub(crate) fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom() == &BigInt::from(1) {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Nat(n) => write!(f, "{n}"),
            Point::Int(i) => write!(f, "{i}"),
            Point::Rat(r) => write_rational(f, r),
            Point::Tuple(ps) => {
                write!(f, "(")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}
