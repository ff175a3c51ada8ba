use std::fmt;

use super::classify::Tri;
use crate::cardinals::{Card, CofPair};
use crate::error::{Error, Result};
use crate::order_terms::{CutSpectrum, Family, OrderTerm, PairMap, Row, Shape};

/// Isomorphism type of the archimedean components `C_γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Components {
    /// Every component is `ℝ`.
    Reals,
    /// `ℤ` at the largest element of the value set, `ℝ` elsewhere.
    IntsAtTop,
    /// Every component is a proper dense subgroup of `ℝ`.
    Dense,
}

impl Components {
    pub fn keyword(self) -> &'static str {
        match self {
            Components::Reals => "reals",
            Components::IntsAtTop => "ints_at_top",
            Components::Dense => "dense",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "reals" => Some(Components::Reals),
            "ints_at_top" => Some(Components::IntsAtTop),
            "dense" => Some(Components::Dense),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    pub vset: OrderTerm,
    pub components: Components,
    /// Spherically complete with respect to the natural valuation.
    pub spherical: bool,
    pub discrete: bool,
    pub divisible: bool,
}

impl GroupDescriptor {
    /// Validates and normalizes: `ℤ` at an existing top of the value set
    /// makes the group discrete, and discreteness needs exactly that.
    pub fn new(
        vset: OrderTerm,
        components: Components,
        spherical: bool,
        discrete: bool,
        divisible: bool,
    ) -> Result<Self> {
        let has_top = !vset.is_empty() && vset.cf()? == Card::One;
        let int_top = components == Components::IntsAtTop && has_top;
        if discrete && !int_top {
            return Err(Error::InvalidDescriptor(
                "a discrete group needs ints_at_top over a value set with a largest element".into(),
            ));
        }
        if divisible && int_top {
            return Err(Error::InvalidDescriptor("a group with a Z component is not divisible".into()));
        }
        Ok(Self { vset, components, spherical, discrete: int_top, divisible })
    }

    /// Hahn product over `vset` with real components.
    pub fn hahn(vset: OrderTerm) -> Result<Self> {
        Self::new(vset, Components::Reals, true, false, true)
    }

    pub fn is_trivial(&self) -> bool {
        self.vset.is_empty()
    }

    fn require_nontrivial(&self) -> Result<()> {
        if self.is_trivial() {
            Err(Error::domain("trivial group"))
        } else {
            Ok(())
        }
    }

    /// Every component is `ℝ` (a `ℤ` at the top only counts when the value
    /// set has a top).
    pub fn all_components_real(&self) -> bool {
        match self.components {
            Components::Reals => true,
            Components::IntsAtTop => !self.discrete,
            Components::Dense => false,
        }
    }

    /// `max{ℵ₀, ci(vG)}`
    pub fn cf_group(&self) -> Result<Card> {
        self.require_nontrivial()?;
        Ok(self.vset.ci()?.at_least_aleph0())
    }

    /// Like [`Self::cf_group`] but `1` for the trivial group.
    pub fn cf_group_or_one(&self) -> Result<Card> {
        if self.is_trivial() {
            Ok(Card::One)
        } else {
            self.cf_group()
        }
    }

    /// `1` if discrete, else `max{ℵ₀, cf(vG)}`.
    pub fn ci_positive_cone(&self) -> Result<Card> {
        self.require_nontrivial()?;
        if self.discrete {
            Ok(Card::One)
        } else {
            Ok(self.vset.cf()?.at_least_aleph0())
        }
    }

    /// `(every principal cut asymmetric, every principal cut strongly
    /// asymmetric)`
    pub fn principal_cuts_ok(&self) -> Result<(bool, bool)> {
        self.require_nontrivial()?;
        let asym = !self.discrete;
        Ok((asym, asym && self.vset.cf()?.is_uncountable()))
    }

    /// Every nonprincipal cut whose balls have a smallest member is
    /// (strongly) asymmetric.
    pub fn type1_cuts_ok(&self) -> Result<bool> {
        self.require_nontrivial()?;
        let components_ok = matches!(self.components, Components::Reals | Components::IntsAtTop);
        if !components_ok {
            return Ok(false);
        }
        // No cut (1, λ) in vG with λ countable.
        let spec = self.vset.cut_spectrum()?;
        let countable = spec.countable_pairs()?;
        Ok(!countable.iter().any(|p| p.left == Card::One))
    }

    /// Every nonprincipal cut whose balls have no smallest member is
    /// asymmetric. Only defined for spherically complete groups.
    pub fn type2_cuts_ok(&self) -> Result<Tri> {
        self.require_nontrivial()?;
        if !self.spherical {
            return Ok(Tri::NotApplicable);
        }
        let spec = self.vset.cut_spectrum()?;
        for f in spec.families.iter().filter(|f| !left_is_one(f)) {
            let bad_countable = f.countable_pairs()?.into_iter().next().is_some();
            if bad_countable || f.infinite_symmetric_witness()?.is_some() {
                return Ok(Tri::False);
            }
        }
        Ok(Tri::True)
    }

    /// Cut spectrum of the group as an ordered set, assembled from the cut
    /// types over the value-set spectrum.
    pub fn order_spectrum(&self) -> Result<CutSpectrum> {
        if self.is_trivial() {
            return Ok(CutSpectrum::empty());
        }
        if !self.spherical {
            return Err(Error::not_derivable(
                "cut spectrum of a group that is not spherically complete",
            ));
        }
        let a0 = Card::aleph0();
        let c = self.ci_positive_cone()?;
        let mut out = CutSpectrum::from_pairs(
            [CofPair::new(Card::One, c.clone()), CofPair::new(c, Card::One)],
            Row::Principal,
        );
        for f in self.vset.cut_spectrum()?.families {
            // A cut (1, λ) at γ: the component cut at 0 lifted against M_γ.
            match &f.shape {
                Shape::Pair(p) if p.left == Card::One => {
                    let fam = Family::pair(p.right.at_least_aleph0(), a0.clone(), Row::TypeI);
                    out.push(fam.mirrored());
                    out.push(fam);
                }
                Shape::RightRange { rights, map: PairMap::Const(Card::One) } => {
                    let fam = Family::new(
                        Shape::LeftRange { lefts: rights.clone(), map: PairMap::Const(a0.clone()) },
                        Row::TypeI,
                    );
                    out.push(fam.mirrored());
                    out.push(fam);
                }
                _ => {}
            }
            // Cuts with an infinite left side come back from the balls that
            // shrink to a point, and again mirrored through x -> -x.
            if !left_is_one(&f) {
                let fam = f.replace_ones(&a0, &a0, Row::TypeII);
                out.push(fam.mirrored());
                out.push(fam);
            }
        }
        if self.components == Components::Dense {
            out.push(Family::pair(a0.clone(), a0, Row::TypeI));
        }
        Ok(out)
    }
}

fn left_is_one(f: &Family) -> bool {
    match &f.shape {
        Shape::Pair(p) => p.left == Card::One,
        Shape::RightRange { map: PairMap::Const(c), .. } => *c == Card::One,
        _ => false,
    }
}

/// `cf(M_γ) = max{ℵ₀, κ}` where `κ` is the coinitiality of the values above
/// `γ`; `None` when `γ` is the largest value.
pub fn cf_m_gamma(upper_coinitiality: Option<&Card>) -> Result<Card> {
    match upper_coinitiality {
        Some(k) => Ok(k.at_least_aleph0()),
        None => Err(Error::domain("M_gamma is trivial at the largest value")),
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "group(vset={}; comp={}; spherical={}; discrete={}; divisible={})",
            self.vset,
            self.components.keyword(),
            self.spherical,
            self.discrete,
            self.divisible
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Residue {
    Reals,
    Proper,
}

impl Residue {
    pub fn keyword(self) -> &'static str {
        match self {
            Residue::Reals => "reals",
            Residue::Proper => "proper",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "reals" => Some(Residue::Reals),
            "proper" => Some(Residue::Proper),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    pub value_group: GroupDescriptor,
    pub residue: Residue,
    pub real_closed: bool,
    /// Spherically complete with respect to the natural valuation.
    pub spherical: bool,
}

impl FieldDescriptor {
    pub fn new(value_group: GroupDescriptor, residue: Residue, real_closed: bool, spherical: bool) -> Result<Self> {
        if real_closed && !value_group.divisible {
            return Err(Error::InvalidDescriptor(
                "the value group of a real closed field is divisible".into(),
            ));
        }
        if value_group.discrete && real_closed {
            return Err(Error::InvalidDescriptor("real closed field with a discrete value group".into()));
        }
        Ok(Self { value_group, residue, real_closed, spherical })
    }

    /// `ℝ((G))`
    pub fn power_series(value_group: GroupDescriptor) -> Result<Self> {
        let real_closed = value_group.divisible;
        Self::new(value_group, Residue::Reals, real_closed, true)
    }

    /// The additive group: its value set is the value group as an ordered
    /// set and every component is a copy of the residue field.
    pub fn additive_group(&self) -> GroupDescriptor {
        let components = match self.residue {
            Residue::Reals => Components::Reals,
            Residue::Proper => Components::Dense,
        };
        GroupDescriptor {
            vset: OrderTerm::group(self.value_group.clone()),
            components,
            spherical: self.spherical,
            discrete: false,
            divisible: true,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "field(group={}; residue={}; realclosed={}; spherical={})",
            self.value_group,
            self.residue.keyword(),
            self.real_closed,
            self.spherical
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: u64) -> Card {
        Card::aleph(n)
    }

    #[test]
    fn cofinality_calculus() {
        let g = GroupDescriptor::hahn(OrderTerm::well(a(0)).unwrap()).unwrap();
        assert_eq!(g.cf_group().unwrap(), a(0));
        let g = GroupDescriptor::hahn(OrderTerm::rev(OrderTerm::well(a(1)).unwrap())).unwrap();
        assert_eq!(g.cf_group().unwrap(), a(1));
        let g = GroupDescriptor::hahn(OrderTerm::finite(1)).unwrap();
        assert_eq!(g.cf_group().unwrap(), a(0));
        assert_eq!(g.ci_positive_cone().unwrap(), a(0));
        let g = GroupDescriptor::hahn(OrderTerm::well(a(1)).unwrap()).unwrap();
        assert_eq!(g.ci_positive_cone().unwrap(), a(1));
        let z = GroupDescriptor::new(OrderTerm::finite(1), Components::IntsAtTop, true, true, false).unwrap();
        assert_eq!(z.ci_positive_cone().unwrap(), Card::One);
        assert_eq!(cf_m_gamma(Some(&Card::One)).unwrap(), a(0));
        assert_eq!(cf_m_gamma(Some(&a(1))).unwrap(), a(1));
        assert_eq!(cf_m_gamma(Some(&a(0))).unwrap(), a(0));
        assert!(cf_m_gamma(None).is_err());
        assert!(GroupDescriptor::hahn(OrderTerm::Empty).unwrap().cf_group().is_err());
    }

    #[test]
    fn ints_at_top_normalizes_to_discrete() {
        let z = GroupDescriptor::new(OrderTerm::finite(1), Components::IntsAtTop, true, false, false).unwrap();
        assert!(z.discrete);
        let no_top = OrderTerm::well(a(0)).unwrap();
        assert!(GroupDescriptor::new(no_top, Components::Reals, true, true, false).is_err());
    }

    #[test]
    fn principal_cuts() {
        let z = GroupDescriptor::new(OrderTerm::finite(1), Components::IntsAtTop, true, true, false).unwrap();
        assert_eq!(z.principal_cuts_ok().unwrap(), (false, false));
        let d0 = GroupDescriptor::hahn(OrderTerm::well(a(0)).unwrap()).unwrap();
        assert_eq!(d0.principal_cuts_ok().unwrap(), (true, false));
        let d1 = GroupDescriptor::hahn(OrderTerm::well(a(1)).unwrap()).unwrap();
        assert_eq!(d1.principal_cuts_ok().unwrap(), (true, true));
    }

    #[test]
    fn integer_group_spectrum() {
        let z = GroupDescriptor::new(OrderTerm::finite(1), Components::IntsAtTop, true, true, false).unwrap();
        let pairs = z.order_spectrum().unwrap().pairs_below(&a(3)).unwrap();
        assert_eq!(pairs.into_iter().collect::<Vec<_>>(), vec![CofPair::new(Card::One, Card::One)]);
    }
}
