use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Map with finite support and nonzero rational values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Finsupp<K: Ord> {
    terms: BTreeMap<K, BigRational>,
}

impl<K: Ord> Default for Finsupp<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Finsupp<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn monomial(k: K, c: BigRational) -> Self {
        Self::from_terms([(k, c)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &BigRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> BigRational {
        self.terms.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, k: K, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let sum = self.coeff(&k) + c;
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    /// Least support point with its coefficient.
    pub fn leading(&self) -> Option<(&K, &BigRational)> {
        self.terms.iter().next()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * r)).collect() }
    }

    /// Sign of the leading coefficient.
    pub fn signum(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Lexicographic order: `a < b` iff `b - a` has a positive leading
    /// coefficient.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.sub(other).signum()
    }

    /// Convolution, combining support points with `op`.
    pub fn convolve(&self, other: &Self, op: impl Fn(&K, &K) -> K) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_term(op(k1, k2), c1 * c2);
            }
        }
        out
    }
}
