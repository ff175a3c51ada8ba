use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::chain::write_rational;
use super::finsupp::Finsupp;
use super::hahn::Val;
use crate::error::{Error, Result};

/// Exponent in `ℚ^n` with the lexicographic order.
pub type Exponent = Vec<BigRational>;

/// Power series with finite support, rational coefficients and exponents
/// in the lexicographically ordered group `ℚ^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesElement {
    dim: usize,
    coeffs: Finsupp<Exponent>,
}

impl SeriesElement {
    pub fn zero(dim: usize) -> Self {
        Self { dim, coeffs: Finsupp::zero() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(vec![BigRational::zero(); dim], BigRational::from_integer(1.into()))
    }

    /// `c·t^g`
    pub fn monomial(g: Exponent, c: BigRational) -> Self {
        Self { dim: g.len(), coeffs: Finsupp::monomial(g, c) }
    }

    pub fn new(dim: usize, terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Result<Self> {
        let coeffs = Finsupp::from_terms(terms);
        if coeffs.support().any(|g| g.len() != dim) {
            return Err(Error::domain(format!("exponent of the wrong length, expected {dim}")));
        }
        Ok(Self { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &Finsupp<Exponent> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::ChainMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self { dim: self.dim, coeffs: self.coeffs.add(&other.coeffs) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self { dim: self.dim, coeffs: self.coeffs.sub(&other.coeffs) })
    }

    pub fn neg(&self) -> Self {
        Self { dim: self.dim, coeffs: self.coeffs.neg() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let coeffs = self
            .coeffs
            .convolve(&other.coeffs, |g, h| g.iter().zip(h).map(|(x, y)| x + y).collect());
        Ok(Self { dim: self.dim, coeffs })
    }

    pub fn signum(&self) -> Ordering {
        self.coeffs.signum()
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        self.same_dim(other)?;
        Ok(self.coeffs.compare(&other.coeffs))
    }

    pub fn nat_valuation(&self) -> Val<Exponent> {
        match self.coeffs.leading() {
            Some((g, _)) => Val::Fin(g.clone()),
            None => Val::Infinity,
        }
    }

    /// Image in the residue field; needs a nonnegative value.
    pub fn residue(&self) -> Result<BigRational> {
        let zero = vec![BigRational::zero(); self.dim];
        match self.nat_valuation() {
            Val::Fin(g) if g < zero => Err(Error::domain("residue of an element with negative value")),
            _ => Ok(self.coeffs.coeff(&zero)),
        }
    }
}

pub(crate) fn write_exponent(f: &mut fmt::Formatter<'_>, g: &Exponent) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in g.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write_rational(f, x)?;
    }
    write!(f, ")")
}

impl fmt::Display for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series(exp=lex{}", self.dim)?;
        for (i, (g, c)) in self.coeffs.terms().enumerate() {
            write!(f, "{}", if i == 0 { "; " } else { ", " })?;
            write_exponent(f, g)?;
            write!(f, ":")?;
            write_rational(f, c)?;
        }
        write!(f, ")")
    }
}
