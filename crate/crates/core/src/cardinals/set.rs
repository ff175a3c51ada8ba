use std::collections::BTreeSet;
use std::fmt;

use super::{Card, OrdinalIndex};
use crate::error::{Error, Result};

/// A set of infinite regular cardinals: one initial segment `Reg_{<ℵ_b}`
/// together with finitely many isolated members above it.
///
/// Normal form: `b` is zero or a successor (a limit bound is bumped past the
/// singular aleph it names), isolated members all lie above the segment and
/// a member sitting right at the segment boundary is absorbed into it.
/// Structural equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CardSet {
    bound: OrdinalIndex,
    singles: BTreeSet<OrdinalIndex>,
}

fn index_is_regular(i: &OrdinalIndex) -> bool {
    i.is_zero() || i.is_successor()
}

impl CardSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `Reg_{<κ}`.
    pub fn reg_below(k: &Card) -> Self {
        match k {
            Card::One => Self::empty(),
            Card::Aleph(b) => Self::from_parts(b.clone(), BTreeSet::new()),
        }
    }

    /// `{λ ∈ Reg : λ ≤ κ}`.
    pub fn at_most(k: &Card) -> Self {
        match k {
            Card::One => Self::empty(),
            Card::Aleph(b) => Self::from_parts(b.succ(), BTreeSet::new()),
        }
    }

    pub fn singleton(k: &Card) -> Result<Self> {
        k.require_reg_infinite()?;
        let idx = k.index().expect("infinite").clone();
        Ok(Self::from_parts(OrdinalIndex::zero(), BTreeSet::from([idx])))
    }

    /// Builds a set from cardinals, ignoring `1`. Singular alephs are rejected.
    pub fn from_cards<'a>(cards: impl IntoIterator<Item = &'a Card>) -> Result<Self> {
        let mut out = Self::empty();
        for c in cards {
            if *c == Card::One {
                continue;
            }
            out = out.union(&Self::singleton(c)?);
        }
        Ok(out)
    }

    fn from_parts(bound: OrdinalIndex, singles: BTreeSet<OrdinalIndex>) -> Self {
        let mut s = Self { bound, singles };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.bound.is_limit() {
            self.bound = self.bound.succ();
        }
        loop {
            let bound = self.bound.clone();
            self.singles.retain(|i| *i >= bound);
            if self.singles.remove(&bound) {
                self.bound = bound.succ();
            } else {
                break;
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bound.is_zero() && self.singles.is_empty()
    }

    /// The segment part is `Reg_{<returned}`.
    pub fn segment_bound(&self) -> Card {
        Card::Aleph(self.bound.clone())
    }

    pub fn isolated(&self) -> impl Iterator<Item = Card> + '_ {
        self.singles.iter().cloned().map(Card::Aleph)
    }

    pub fn contains(&self, k: &Card) -> bool {
        match k {
            Card::One => false,
            Card::Aleph(i) => {
                index_is_regular(i) && (*i < self.bound || self.singles.contains(i))
            }
        }
    }

    pub fn insert(&self, k: &Card) -> Result<Self> {
        Ok(self.union(&Self::singleton(k)?))
    }

    pub fn union(&self, other: &Self) -> Self {
        let bound = self.bound.clone().max(other.bound.clone());
        let singles = self.singles.union(&other.singles).cloned().collect();
        Self::from_parts(bound, singles)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let bound = self.bound.clone().min(other.bound.clone());
        let mut singles = BTreeSet::new();
        for i in &self.singles {
            if *i < other.bound || other.singles.contains(i) {
                singles.insert(i.clone());
            }
        }
        for i in &other.singles {
            if *i < self.bound {
                singles.insert(i.clone());
            }
        }
        Self::from_parts(bound, singles)
    }

    /// Closed downward inside `Reg`.
    pub fn is_initial_segment(&self) -> bool {
        self.singles.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if !self.singles.iter().all(|i| other.contains(&Card::Aleph(i.clone()))) {
            return false;
        }
        if self.bound <= other.bound {
            return true;
        }
        // Regular indices in [other.bound, self.bound) must all be isolated
        // members of `other`; that is only possible for a finite gap.
        let Some(gap) = other.bound.finite_distance(&self.bound) else {
            return false;
        };
        let base = other.bound.clone();
        (0..gap)
            .map(|k| base.add_finite(k))
            .filter(index_is_regular)
            .all(|i| other.singles.contains(&i))
    }

    /// Members strictly below `limit`, in increasing order. Fails when the
    /// answer would be infinite.
    pub fn members_below(&self, limit: &Card) -> Result<Vec<Card>> {
        let Card::Aleph(lim) = limit else {
            return Ok(Vec::new());
        };
        let top = self.bound.clone().min(lim.clone());
        if !top.is_finite() {
            return Err(Error::domain(format!(
                "enumerating {self} below {limit} does not terminate"
            )));
        }
        let mut out: Vec<Card> = (0..top.finite_part()).map(Card::aleph).collect();
        out.extend(self.singles.iter().filter(|i| *i < lim).cloned().map(Card::Aleph));
        Ok(out)
    }

    /// Largest member, if the set has one.
    pub fn max_member(&self) -> Option<Card> {
        if let Some(i) = self.singles.iter().next_back() {
            return Some(Card::Aleph(i.clone()));
        }
        // bound is zero or a successor; the segment's top is its predecessor
        // when that index is itself regular.
        let top = self.bound.pred()?;
        index_is_regular(&top).then_some(Card::Aleph(top))
    }

    /// Smallest cardinal strictly above every member. For a set with a
    /// maximum this is the successor of the maximum.
    pub fn strict_sup(&self) -> Card {
        match self.singles.iter().next_back() {
            Some(i) => Card::Aleph(i.succ()),
            None => Card::Aleph(self.bound.clone()),
        }
    }
}

impl fmt::Display for CardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        if !self.bound.is_zero() {
            write!(f, "reg<aleph({})", self.bound)?;
            first = false;
        }
        for i in &self.singles {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "aleph({i})")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(n: u64) -> Card {
        Card::aleph(n)
    }

    #[test]
    fn segment_absorption() {
        let u = CardSet::reg_below(&a(1)).union(&CardSet::singleton(&a(1)).unwrap());
        assert_eq!(u, CardSet::reg_below(&a(2)));
        assert!(CardSet::reg_below(&a(2)).contains(&a(0)));
    }

    #[test]
    fn initial_segment_check() {
        let s = CardSet::singleton(&a(1)).unwrap();
        assert!(!s.is_initial_segment());
        // Definition-level oracle: ℵ₁ ∈ s but ℵ₀ ∉ s.
        assert!(s.contains(&a(1)) && !s.contains(&a(0)));
        assert!(CardSet::singleton(&a(0)).unwrap().is_initial_segment());
        assert!(CardSet::reg_below(&a(5)).is_initial_segment());
    }

    #[test]
    fn limit_bounds_normalize() {
        let w = OrdinalIndex::omega();
        let below_w = CardSet::reg_below(&Card::Aleph(w.clone()));
        let below_w1 = CardSet::reg_below(&Card::Aleph(w.succ()));
        assert_eq!(below_w, below_w1);
        assert!(below_w.contains(&a(1000)));
        assert!(!below_w.contains(&Card::Aleph(w.clone())));
        assert!(CardSet::singleton(&Card::Aleph(w)).is_err());
    }

    #[test]
    fn intersection_and_subset() {
        let s = CardSet::reg_below(&a(3)).union(&CardSet::singleton(&a(7)).unwrap());
        let t = CardSet::reg_below(&a(2)).union(&CardSet::singleton(&a(7)).unwrap());
        assert_eq!(s.intersection(&t), t);
        assert!(t.is_subset(&s));
        assert!(!s.is_subset(&t));
        let gap = CardSet::reg_below(&a(2))
            .union(&CardSet::from_cards([&a(2), &a(3)]).unwrap());
        assert!(CardSet::reg_below(&a(4)).is_subset(&gap));
    }

    #[test]
    fn enumeration_and_extrema() {
        let s = CardSet::reg_below(&a(3)).union(&CardSet::singleton(&a(7)).unwrap());
        assert_eq!(s.members_below(&a(10)).unwrap(), vec![a(0), a(1), a(2), a(7)]);
        assert_eq!(s.members_below(&a(2)).unwrap(), vec![a(0), a(1)]);
        assert_eq!(s.max_member(), Some(a(7)));
        assert_eq!(CardSet::reg_below(&a(3)).max_member(), Some(a(2)));
        assert_eq!(CardSet::empty().max_member(), None);
        let below_w = CardSet::reg_below(&Card::Aleph(OrdinalIndex::omega()));
        assert_eq!(below_w.max_member(), None);
        assert!(below_w.members_below(&Card::Aleph(OrdinalIndex::omega())).is_err());
    }

    fn arb_set() -> impl Strategy<Value = CardSet> {
        (0u64..6, proptest::collection::vec(0u64..10, 0..4)).prop_map(|(b, singles)| {
            let mut s = CardSet::reg_below(&a(b));
            for x in singles {
                s = s.insert(&a(x)).unwrap();
            }
            s
        })
    }

    fn as_members(s: &CardSet) -> Vec<Card> {
        s.members_below(&a(12)).unwrap()
    }

    proptest! {
        #[test]
        fn union_is_commutative_and_associative(x in arb_set(), y in arb_set(), z in arb_set()) {
            prop_assert_eq!(x.union(&y), y.union(&x));
            prop_assert_eq!(x.union(&y).union(&z), x.union(&y.union(&z)));
        }

        #[test]
        fn normal_form_is_set_equality(x in arb_set(), y in arb_set()) {
            let same = as_members(&x) == as_members(&y);
            prop_assert_eq!(same, x == y);
        }

        #[test]
        fn intersection_matches_membership(x in arb_set(), y in arb_set()) {
            let i = x.intersection(&y);
            for n in 0..12 {
                prop_assert_eq!(i.contains(&a(n)), x.contains(&a(n)) && y.contains(&a(n)));
            }
            prop_assert_eq!(i.is_subset(&x), true);
        }

        #[test]
        fn reg_below_succ_adds_the_cardinal(n in 0u64..20) {
            let k = a(n);
            let lhs = CardSet::reg_below(&k.succ().unwrap());
            let rhs = CardSet::reg_below(&k).insert(&k).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(k.succ().unwrap() > k);
            prop_assert!(k.succ().unwrap().is_regular());
        }
    }
}
