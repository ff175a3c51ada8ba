use std::fmt;

/// Ordinal below ω^ω in Cantor normal form.
///
/// Stored as `(exponent, coefficient)` terms with strictly decreasing
/// exponents and positive coefficients. With that layout the derived
/// lexicographic `Ord` on the term vector is exactly ordinal comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrdinalIndex {
    terms: Vec<(u32, u64)>,
}

impl OrdinalIndex {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self { terms: vec![(0, n)] }
        }
    }

    pub fn omega() -> Self {
        Self { terms: vec![(1, 1)] }
    }

    /// Builds a normal form from arbitrary `(exponent, coefficient)` terms.
    /// Terms are summed as ordinals left to right, so absorbed terms vanish.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u64)>) -> Self {
        terms
            .into_iter()
            .filter(|&(_, c)| c > 0)
            .fold(Self::zero(), |acc, t| acc.add(&Self { terms: vec![t] }))
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(&(0, _)))
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|&(e, _)| e == 0)
    }

    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some(&(0, c)) => c,
            _ => 0,
        }
    }

    /// The ordinal with the finite tail removed (zero or a limit).
    pub fn infinite_part(&self) -> Self {
        let mut terms = self.terms.clone();
        if matches!(terms.last(), Some(&(0, _))) {
            terms.pop();
        }
        Self { terms }
    }

    pub fn add_finite(&self, n: u64) -> Self {
        if n == 0 {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((0, c)) => *c += n,
            _ => terms.push((0, n)),
        }
        Self { terms }
    }

    pub fn succ(&self) -> Self {
        self.add_finite(1)
    }

    pub fn pred(&self) -> Option<Self> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a last term");
        if last.1 == 1 {
            terms.pop();
        } else {
            last.1 -= 1;
        }
        Some(Self { terms })
    }

    /// Ordinal addition `self + other`.
    pub fn add(&self, other: &Self) -> Self {
        let Some(&(lead, lead_coef)) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(u32, u64)> = self
            .terms
            .iter()
            .copied()
            .take_while(|&(e, _)| e >= lead)
            .collect();
        match terms.last_mut() {
            Some((e, c)) if *e == lead => *c += lead_coef,
            _ => terms.push((lead, lead_coef)),
        }
        terms.extend_from_slice(&other.terms[1..]);
        Self { terms }
    }

    /// Number of steps from `self` up to `other` when both share the same
    /// infinite part, `None` otherwise or when `other < self`.
    pub fn finite_distance(&self, other: &Self) -> Option<u64> {
        if self.infinite_part() != other.infinite_part() {
            return None;
        }
        other.finite_part().checked_sub(self.finite_part())
    }
}

impl fmt::Display for OrdinalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "w")?,
                (1, c) => write!(f, "w*{c}")?,
                (e, 1) => write!(f, "w^{e}")?,
                (e, c) => write!(f, "w^{e}*{c}")?,
            }
        }
        Ok(())
    }
}
