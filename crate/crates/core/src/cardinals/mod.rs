//! Symbolic regular cardinals, cofinality pairs and sets of cardinals.
//!
//! Cardinals are `1` or `ℵ_α` with `α` an ordinal below ω^ω. Only `1`,
//! `ℵ_0` and successor alephs are regular; limit alephs can be written
//! down but every operation that needs regularity rejects them.

mod ordinal;
mod set;

use std::fmt;

pub use ordinal::OrdinalIndex;
pub use set::CardSet;

use crate::error::{Error, Result};

/// `1` or an aleph. Also used for the values a cofinality can take.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Card {
    One,
    Aleph(OrdinalIndex),
}

impl Card {
    pub fn aleph(n: u64) -> Self {
        Card::Aleph(OrdinalIndex::finite(n))
    }

    pub fn aleph0() -> Self {
        Card::aleph(0)
    }

    pub fn aleph_index(index: OrdinalIndex) -> Self {
        Card::Aleph(index)
    }

    pub fn index(&self) -> Option<&OrdinalIndex> {
        match self {
            Card::One => None,
            Card::Aleph(i) => Some(i),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Card::Aleph(_))
    }

    pub fn is_uncountable(&self) -> bool {
        matches!(self, Card::Aleph(i) if !i.is_zero())
    }

    /// At most ℵ₀ (this includes `1`).
    pub fn is_countable(&self) -> bool {
        !self.is_uncountable()
    }

    pub fn is_regular(&self) -> bool {
        match self {
            Card::One => true,
            Card::Aleph(i) => i.is_zero() || i.is_successor(),
        }
    }

    /// Regular and infinite, i.e. a member of `Reg`.
    pub fn is_reg_infinite(&self) -> bool {
        self.is_infinite() && self.is_regular()
    }

    /// Cardinal successor. Always regular.
    pub fn succ(&self) -> Result<Card> {
        match self {
            Card::One => Err(Error::domain("successor of the finite cardinal 1")),
            Card::Aleph(i) => Ok(Card::Aleph(i.succ())),
        }
    }

    pub fn succ_n(&self, n: u64) -> Result<Card> {
        match self {
            Card::One => Err(Error::domain("successor of the finite cardinal 1")),
            Card::Aleph(i) => Ok(Card::Aleph(i.add_finite(n))),
        }
    }

    /// `max{ℵ₀, self}`.
    pub fn at_least_aleph0(&self) -> Card {
        match self {
            Card::One => Card::aleph0(),
            c => c.clone(),
        }
    }

    pub fn require_regular(&self) -> Result<&Card> {
        if self.is_regular() {
            Ok(self)
        } else {
            Err(Error::NotRegular(self.to_string()))
        }
    }

    pub fn require_reg_infinite(&self) -> Result<&Card> {
        if self.is_reg_infinite() {
            Ok(self)
        } else if self.is_infinite() {
            Err(Error::NotRegular(self.to_string()))
        } else {
            Err(Error::domain(format!("expected an infinite regular cardinal, got {self}")))
        }
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Card::One => write!(f, "1"),
            Card::Aleph(i) => write!(f, "aleph({i})"),
        }
    }
}

pub fn succ(k: &Card) -> Result<Card> {
    k.succ()
}

pub fn is_regular(k: &Card) -> bool {
    k.is_regular()
}

/// `Reg_{<κ}`: the infinite regular cardinals strictly below `κ`.
pub fn reg_below(k: &Card) -> CardSet {
    CardSet::reg_below(k)
}

/// Cofinality pair `(κ, λ)` of a cut: cofinality of the lower set and
/// coinitiality of the upper set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CofPair {
    pub left: Card,
    pub right: Card,
}

impl CofPair {
    pub fn new(left: Card, right: Card) -> Self {
        Self { left, right }
    }

    pub fn mirrored(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }

    /// A cut is principal exactly when one side has an extremal element.
    pub fn is_principal(&self) -> bool {
        self.left == Card::One || self.right == Card::One
    }

    pub fn is_asymmetric(&self) -> bool {
        self.left != self.right
    }

    pub fn is_strongly_asymmetric(&self) -> bool {
        self.is_asymmetric() && (self.left.is_uncountable() || self.right.is_uncountable())
    }

    pub fn is_regular(&self) -> bool {
        self.left.is_regular() && self.right.is_regular()
    }
}

impl fmt::Display for CofPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aleph_omega() -> Card {
        Card::Aleph(OrdinalIndex::omega())
    }

    #[test]
    fn succ_examples() {
        assert_eq!(succ(&Card::aleph(0)).unwrap(), Card::aleph(1));
        assert_eq!(succ(&Card::aleph(1)).unwrap(), Card::aleph(2));
        let s = succ(&aleph_omega()).unwrap();
        assert_eq!(s, Card::Aleph(OrdinalIndex::omega().succ()));
        assert!(!aleph_omega().is_regular());
        assert!(s.is_regular());
        assert!(succ(&Card::One).is_err());
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular(&Card::aleph(0)));
        assert!(is_regular(&Card::aleph(2)));
        assert!(is_regular(&Card::One));
        // cf(ℵ_ω) = ℵ₀: the sequence ℵ_0, ℵ_1, ... is cofinal.
        assert!(!is_regular(&aleph_omega()));
        assert!(aleph_omega().require_reg_infinite().is_err());
    }

    #[test]
    fn reg_below_examples() {
        assert!(reg_below(&Card::aleph(0)).is_empty());
        assert!(reg_below(&Card::One).is_empty());
        let s = reg_below(&Card::aleph(2));
        assert!(s.contains(&Card::aleph(0)));
        assert!(s.contains(&Card::aleph(1)));
        assert!(!s.contains(&Card::aleph(2)));
        assert_eq!(s.to_string(), "{reg<aleph(2)}");
    }

    #[test]
    fn pair_predicates() {
        let p = CofPair::new(Card::aleph(0), Card::aleph(1));
        assert!(p.is_strongly_asymmetric());
        assert!(!p.is_principal());
        let q = CofPair::new(Card::One, Card::aleph(0));
        assert!(q.is_asymmetric() && !q.is_strongly_asymmetric());
        assert!(q.is_principal());
        assert_eq!(q.mirrored(), CofPair::new(Card::aleph(0), Card::One));
    }
}
