use std::fmt;

use super::descriptor::{FieldDescriptor, GroupDescriptor, Residue};
use crate::error::{Error, Result};
use crate::order_terms::{OrderTerm, Predicates};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    NotApplicable,
}

impl Tri {
    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::NotApplicable => "n/a",
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub symmetric: Tri,
    pub strong: Tri,
    pub extreme: Tri,
    pub symmetric_d: Tri,
    pub extreme_d: Tri,
    /// Spherical completeness with respect to order balls.
    pub spherical_balls: Tri,
    pub facts: Vec<&'static str>,
}

/// Symmetric, strong and extreme completeness along one derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathVerdict {
    pub symmetric: bool,
    pub strong: bool,
    pub extreme: bool,
}

/// Predicates of a value set. A group's underlying order is classified
/// through the group itself, so non-spherical value groups still resolve.
fn vset_predicates(t: &OrderTerm) -> Result<Predicates> {
    match t {
        OrderTerm::Group(h) if h.is_trivial() => Ok(Predicates {
            symmetric: true,
            strong: true,
            extreme: false,
            spherical_balls: true,
        }),
        OrderTerm::Group(h) => {
            let v = valuation_path(h)?;
            // Groups are dense or discrete; for dense groups balls and
            // symmetric completeness agree.
            let balls = if h.discrete { classify_discrete(h)?.symmetric_d.is_true() } else { v.symmetric };
            Ok(Predicates { symmetric: v.symmetric, strong: v.strong, extreme: v.extreme, spherical_balls: balls })
        }
        t => t.completeness_predicates(),
    }
}

/// Characterization through the natural valuation, the value set and the
/// components.
pub fn valuation_path(g: &GroupDescriptor) -> Result<PathVerdict> {
    if g.is_trivial() {
        return Err(Error::domain("classification needs a nontrivial group"));
    }
    let vg = vset_predicates(&g.vset)?;
    let symmetric = g.spherical && vg.strong && g.all_components_real();
    let strong = symmetric && g.vset.cf()?.is_uncountable();
    let extreme = symmetric && vg.extreme;
    Ok(PathVerdict { symmetric, strong, extreme })
}

/// The same verdict assembled from the principal, type I and type II cut
/// criteria.
pub fn cut_path(g: &GroupDescriptor) -> Result<PathVerdict> {
    let (principal, principal_strong) = g.principal_cuts_ok()?;
    let type1 = g.type1_cuts_ok()?;
    // Without spherical completeness some cut has no point in all its balls
    // and cannot be asymmetric.
    let type2 = g.type2_cuts_ok()?.is_true();
    let symmetric = principal && type1 && type2;
    let strong = symmetric && principal_strong;
    let extreme = strong && g.cf_group()?.is_uncountable();
    Ok(PathVerdict { symmetric, strong, extreme })
}

pub fn classify_group(g: &GroupDescriptor) -> Result<Verdict> {
    let v = valuation_path(g)?;
    let (symmetric_d, extreme_d, balls) = if g.discrete {
        let d = classify_discrete(g)?;
        (d.symmetric_d, d.extreme_d, d.symmetric_d)
    } else {
        (Tri::NotApplicable, Tri::NotApplicable, v.symmetric.into())
    };
    let mut facts = Vec::new();
    if v.symmetric {
        facts.extend(["divisible", "isomorphic to a Hahn product"]);
    }
    if symmetric_d.is_true() {
        facts.extend(["Z-group", "isomorphic to a Hahn product"]);
    }
    Ok(Verdict {
        symmetric: v.symmetric.into(),
        strong: v.strong.into(),
        extreme: v.extreme.into(),
        symmetric_d,
        extreme_d,
        spherical_balls: balls,
        facts,
    })
}

/// Discrete groups: completeness of `G/ℤ`, whose value set drops the top.
pub fn classify_discrete(g: &GroupDescriptor) -> Result<Verdict> {
    if !g.discrete {
        return Err(Error::domain("classify_discrete needs a discretely ordered group"));
    }
    let quotient_vset = g.vset.drop_max()?;
    let (symmetric_d, extreme_d) = if quotient_vset.is_empty() {
        // G = ℤ: no cuts in the quotient, no uncountable cofinality either.
        (true, false)
    } else {
        let q = GroupDescriptor::new(quotient_vset, super::Components::Reals, g.spherical, false, true)?;
        let v = valuation_path(&q)?;
        (v.strong, v.extreme)
    };
    Ok(Verdict {
        symmetric: Tri::False,
        strong: Tri::False,
        extreme: Tri::False,
        symmetric_d: symmetric_d.into(),
        extreme_d: extreme_d.into(),
        spherical_balls: symmetric_d.into(),
        facts: if symmetric_d { vec!["Z-group", "isomorphic to a Hahn product"] } else { vec![] },
    })
}

pub fn classify_field(k: &FieldDescriptor) -> Result<Verdict> {
    let vk = vset_predicates(&OrderTerm::group(k.value_group.clone()))?;
    let base = k.spherical && k.residue == Residue::Reals;
    let symmetric = base && vk.strong;
    // Value groups have cofinality equal to coinitiality, so strong and
    // extreme coincide for fields.
    let strong = base && vk.extreme;
    let facts = if symmetric {
        vec!["real closed", "isomorphic to a power series field", "divisible value group"]
    } else {
        vec![]
    };
    Ok(Verdict {
        symmetric: symmetric.into(),
        strong: strong.into(),
        extreme: strong.into(),
        symmetric_d: Tri::NotApplicable,
        extreme_d: Tri::NotApplicable,
        spherical_balls: symmetric.into(),
        facts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order_terms::extend_order;
    use crate::struct_classify::Components;

    fn z() -> GroupDescriptor {
        GroupDescriptor::new(OrderTerm::finite(1), Components::IntsAtTop, true, true, false).unwrap()
    }

    fn extreme_set() -> OrderTerm {
        extend_order(&OrderTerm::Empty).unwrap().term
    }

    #[test]
    fn integers() {
        let v = classify_group(&z()).unwrap();
        assert_eq!(v.symmetric, Tri::False);
        assert_eq!(v.spherical_balls, Tri::True);
        assert_eq!(v.symmetric_d, Tri::True);
        assert_eq!(v.extreme_d, Tri::False);
    }

    #[test]
    fn hahn_over_extreme_set() {
        let g = GroupDescriptor::hahn(extreme_set()).unwrap();
        let v = classify_group(&g).unwrap();
        assert!(v.symmetric.is_true() && v.strong.is_true() && v.extreme.is_true());
        assert!(v.facts.contains(&"divisible"));
        assert_eq!(cut_path(&g).unwrap(), valuation_path(&g).unwrap());
    }

    #[test]
    fn h_times_z() {
        let h_vset = extreme_set();
        let g = GroupDescriptor::new(
            OrderTerm::sum(h_vset, OrderTerm::finite(1)),
            Components::IntsAtTop,
            true,
            true,
            false,
        )
        .unwrap();
        let v = classify_discrete(&g).unwrap();
        assert!(v.symmetric_d.is_true() && v.extreme_d.is_true());
    }

    #[test]
    fn dense_components_break_symmetry() {
        let g = GroupDescriptor::new(extreme_set(), Components::Dense, true, false, true).unwrap();
        assert_eq!(classify_group(&g).unwrap().symmetric, Tri::False);
        assert_eq!(cut_path(&g).unwrap(), valuation_path(&g).unwrap());
    }

    #[test]
    fn reals_field() {
        let trivial = GroupDescriptor::hahn(OrderTerm::Empty).unwrap();
        let r = FieldDescriptor::power_series(trivial).unwrap();
        let v = classify_field(&r).unwrap();
        assert!(v.symmetric.is_true() && !v.strong.is_true());
        let add = classify_group(&r.additive_group()).unwrap();
        assert_eq!(add.symmetric, v.symmetric);
    }
}
