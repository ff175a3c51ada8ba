use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use super::chain::{write_rational, IndexChain, Point};
use super::finsupp::Finsupp;
use crate::error::{Error, Result};

/// Value of an element under the natural valuation: the least support
/// point, or `Infinity` for zero. `Infinity` sorts above every point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Val<P> {
    Fin(P),
    Infinity,
}

impl<P: fmt::Display> fmt::Display for Val<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(p) => write!(f, "{p}"),
            Val::Infinity => write!(f, "inf"),
        }
    }
}

/// Element of the ordered Hahn sum of copies of `ℚ` over an index chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HahnElement {
    chain: IndexChain,
    coeffs: Finsupp<Point>,
}

impl HahnElement {
    pub fn zero(chain: IndexChain) -> Self {
        Self { chain, coeffs: Finsupp::zero() }
    }

    pub fn new(chain: IndexChain, terms: impl IntoIterator<Item = (Point, BigRational)>) -> Result<Self> {
        let coeffs = Finsupp::from_terms(terms);
        for p in coeffs.support() {
            chain.require(p)?;
        }
        Ok(Self { chain, coeffs })
    }

    pub fn chain(&self) -> &IndexChain {
        &self.chain
    }

    pub fn coeffs(&self) -> &Finsupp<Point> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn same_chain(&self, other: &Self) -> Result<()> {
        if self.chain == other.chain {
            Ok(())
        } else {
            Err(Error::ChainMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_chain(other)?;
        Ok(Self { chain: self.chain.clone(), coeffs: self.coeffs.add(&other.coeffs) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_chain(other)?;
        Ok(Self { chain: self.chain.clone(), coeffs: self.coeffs.sub(&other.coeffs) })
    }

    pub fn neg(&self) -> Self {
        Self { chain: self.chain.clone(), coeffs: self.coeffs.neg() }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { chain: self.chain.clone(), coeffs: self.coeffs.scale(r) }
    }

    pub fn abs(&self) -> Self {
        Self { chain: self.chain.clone(), coeffs: self.coeffs.abs() }
    }

    /// Positive iff the coefficient at the least support point is positive.
    pub fn signum(&self) -> Ordering {
        self.coeffs.signum()
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        self.same_chain(other)?;
        Ok(self.coeffs.compare(&other.coeffs))
    }

    pub fn nat_valuation(&self) -> Val<Point> {
        match self.coeffs.leading() {
            Some((p, _)) => Val::Fin(p.clone()),
            None => Val::Infinity,
        }
    }

    /// Archimedean equivalence, decided by equal valuations.
    pub fn arch_equiv(&self, other: &Self) -> Result<bool> {
        self.same_chain(other)?;
        Ok(self.nat_valuation() == other.nat_valuation())
    }

    /// Searches `n ≤ max_n` with `n|a| ≥ |b|` and `n|b| ≥ |a|`.
    pub fn arch_equiv_witness(&self, other: &Self, max_n: u64) -> Result<Option<u64>> {
        self.same_chain(other)?;
        let (a, b) = (self.abs(), other.abs());
        for n in 1..=max_n {
            let n = BigRational::from_integer(n.into());
            let ok1 = a.scale(&n).compare(&b)? != Ordering::Less;
            let ok2 = b.scale(&n).compare(&a)? != Ordering::Less;
            if ok1 && ok2 {
                return Ok(Some(n.to_integer().try_into().unwrap_or(u64::MAX)));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for HahnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hahn(chain={}", self.chain)?;
        for (i, (p, c)) in self.coeffs.terms().enumerate() {
            write!(f, "{}{p}:", if i == 0 { "; " } else { ", " })?;
            write_rational(f, c)?;
        }
        write!(f, ")")
    }
}
