use std::collections::BTreeMap;
use std::fmt;

use crate::cardinals::{Card, CardSet};
use crate::error::{Error, Result};

/// Fallback for arguments not listed in a [`PhiMap`] table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PhiDefault {
    Const(Card),
    Succ,
}

/// Piecewise map `{1} ∪ Reg → Reg`: an explicit table plus an optional
/// rule for every other argument.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PhiMap {
    pub table: BTreeMap<Card, Card>,
    pub default: Option<PhiDefault>,
}

impl PhiMap {
    pub fn constant(value: Card) -> Self {
        Self { table: BTreeMap::new(), default: Some(PhiDefault::Const(value)) }
    }

    pub fn successor() -> Self {
        Self { table: BTreeMap::new(), default: Some(PhiDefault::Succ) }
    }

    pub fn from_table(entries: impl IntoIterator<Item = (Card, Card)>) -> Self {
        Self { table: entries.into_iter().collect(), default: None }
    }

    pub fn with_default(mut self, default: PhiDefault) -> Self {
        self.default = Some(default);
        self
    }

    pub fn eval(&self, k: &Card) -> Result<Card> {
        if let Some(v) = self.table.get(k) {
            return Ok(v.clone());
        }
        match &self.default {
            Some(PhiDefault::Const(c)) => Ok(c.clone()),
            Some(PhiDefault::Succ) => match k {
                Card::One => Ok(Card::aleph0()),
                k => k.succ(),
            },
            None => Err(Error::domain(format!("phi map undefined at {k}"))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (k, v) in &self.table {
            k.require_regular()?;
            v.require_reg_infinite()?;
        }
        if let Some(PhiDefault::Const(c)) = &self.default {
            c.require_reg_infinite()?;
        }
        Ok(())
    }

    fn keys_in<'a>(&'a self, s: &'a CardSet) -> impl Iterator<Item = &'a Card> + 'a {
        self.table.keys().filter(move |k| s.contains(k))
    }

    /// Checks `φ(S) ⊆ target`, optionally including the argument `1`.
    /// Returns the first argument whose image escapes `target`.
    pub fn image_escape(
        &self,
        s: &CardSet,
        include_one: bool,
        target: &CardSet,
    ) -> Result<Option<Card>> {
        if include_one {
            let v = self.eval(&Card::One)?;
            if !target.contains(&v) {
                return Ok(Some(Card::One));
            }
        }
        for k in self.keys_in(s) {
            if !target.contains(&self.table[k]) {
                return Ok(Some(k.clone()));
            }
        }
        let rest = s.clone();
        match &self.default {
            None => {
                // Every member of `s` must be a table key.
                let covered = CardSet::from_cards(self.table.keys())?;
                if !rest.is_subset(&covered) {
                    return Err(Error::domain(format!(
                        "phi map is not total on {s}: no default rule"
                    )));
                }
                Ok(None)
            }
            Some(PhiDefault::Const(c)) => {
                let uncovered = self.uncovered_witness(&rest)?;
                match uncovered {
                    Some(k) if !target.contains(c) => Ok(Some(k)),
                    _ => Ok(None),
                }
            }
            Some(PhiDefault::Succ) => self.succ_escape(&rest, target),
        }
    }

    /// Some member of `s` that is not a table key.
    fn uncovered_witness(&self, s: &CardSet) -> Result<Option<Card>> {
        let covered = CardSet::from_cards(self.table.keys())?;
        if s.is_subset(&covered) {
            return Ok(None);
        }
        // Walk up from ℵ₀ through the segment, then the isolated members.
        let seg = s.segment_bound();
        let mut k = Card::aleph0();
        while k < seg {
            if s.contains(&k) && !self.table.contains_key(&k) {
                return Ok(Some(k));
            }
            k = k.succ()?;
            if !k.is_regular() {
                k = k.succ()?;
            }
        }
        Ok(s.isolated().find(|k| !self.table.contains_key(k)))
    }

    /// Looks for an uncovered `κ ∈ s` with `κ⁺ ∉ target`.
    fn succ_escape(&self, s: &CardSet, target: &CardSet) -> Result<Option<Card>> {
        for k in s.isolated() {
            if !self.table.contains_key(&k) && !target.contains(&k.succ()?) {
                return Ok(Some(k));
            }
        }
        let Card::Aleph(b) = s.segment_bound() else { unreachable!() };
        let Card::Aleph(tb) = target.segment_bound() else { unreachable!() };
        // ℵ_a⁺ lies in target's segment iff a + 1 < tb, so only a ≥ pred(tb)
        // can escape.
        let from = tb.pred().unwrap_or_default();
        if from >= b {
            return Ok(None);
        }
        // An infinite run of candidates meets finitely many table keys and
        // isolated target members; a short walk then finds an escape.
        let steps = match from.finite_distance(&b) {
            Some(d) => d,
            None => (self.table.len() + target.isolated().count() + 3) as u64,
        };
        for k in 0..steps {
            let k = Card::Aleph(from.add_finite(k));
            if !s.contains(&k) || self.table.contains_key(&k) {
                continue;
            }
            if !target.contains(&k.succ()?) {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// A fixed point `κ = φ(κ)` with `κ ∈ s`.
    pub fn fixed_point_in(&self, s: &CardSet) -> Result<Option<Card>> {
        for k in self.keys_in(s) {
            if self.table[k] == *k {
                return Ok(Some(k.clone()));
            }
        }
        if let Some(PhiDefault::Const(c)) = &self.default {
            if s.contains(c) && !self.table.contains_key(c) {
                return Ok(Some(c.clone()));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for PhiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for (k, v) in &self.table {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{k}:{v}")?;
            first = false;
        }
        if let Some(d) = &self.default {
            if !first {
                write!(f, ",")?;
            }
            match d {
                PhiDefault::Const(c) => write!(f, "*:{c}")?,
                PhiDefault::Succ => write!(f, "*:succ")?,
            }
        }
        write!(f, "]")
    }
}
