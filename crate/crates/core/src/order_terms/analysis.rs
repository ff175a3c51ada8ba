use std::fmt;

use super::schedule::first_n;
use super::spectrum::{CutSpectrum, Family, PairMap, Row, Rung, Shape};
use super::{LexRefined, LexSchedule, OrderTerm};
use crate::cardinals::{Card, CardSet, CofPair};
use crate::error::{Error, Result};

/// Outcome of one named side condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Counterexample when the condition fails.
    pub witness: Option<String>,
}

impl ConditionCheck {
    fn pass(name: &'static str) -> Self {
        Self { name, passed: true, witness: None }
    }

    fn fail(name: &'static str, witness: impl Into<String>) -> Self {
        Self { name, passed: false, witness: Some(witness.into()) }
    }

    fn from_option(name: &'static str, witness: Option<String>) -> Self {
        match witness {
            Some(w) => Self::fail(name, w),
            None => Self::pass(name),
        }
    }
}

impl fmt::Display for ConditionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass", self.name),
            Some(w) => write!(f, "{}: fail ({w})", self.name),
        }
    }
}

/// Completeness predicates of an order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Predicates {
    pub symmetric: bool,
    pub strong: bool,
    pub extreme: bool,
    pub spherical_balls: bool,
}

/// Predicates together with the pairs that refute them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completeness {
    pub predicates: Predicates,
    pub symmetric_witness: Option<CofPair>,
    pub weak_witness: Option<CofPair>,
    pub ball_witness: Option<CofPair>,
}

impl OrderTerm {
    /// Symbolic set of cofinality pairs of all cuts.
    pub fn cut_spectrum(&self) -> Result<CutSpectrum> {
        match self {
            OrderTerm::Empty | OrderTerm::Finite(1) => Ok(CutSpectrum::empty()),
            OrderTerm::Finite(_) => Ok(pairs([(Card::One, Card::One)], Row::Block)),
            OrderTerm::Well(k) => {
                let mut s = pairs([(Card::One, Card::One)], Row::Block);
                s.push(Family::new(
                    Shape::LeftRange { lefts: CardSet::reg_below(k), map: PairMap::Const(Card::One) },
                    Row::Block,
                ));
                Ok(s)
            }
            OrderTerm::Rev(t) => Ok(t.cut_spectrum()?.mirrored()),
            OrderTerm::Sum(a, b) => {
                let mut s = a.cut_spectrum()?;
                s.extend(b.cut_spectrum()?);
                s.push(Family::pair(a.cf()?, b.ci()?, Row::Boundary));
                Ok(s)
            }
            OrderTerm::Lex(outer, inner) => {
                let (cf_in, ci_in) = (inner.cf()?, inner.ci()?);
                let mut s = inner.cut_spectrum()?;
                for f in outer.cut_spectrum()?.families {
                    s.push(f.replace_ones(&cf_in, &ci_in, f.row));
                }
                Ok(s)
            }
            OrderTerm::Completion(_) => Err(Error::not_derivable(
                "the cut spectrum of a free-standing completion is not determined",
            )),
            OrderTerm::Atom(a) => match &a.cuts {
                Some(cuts) => Ok(CutSpectrum::from_pairs(cuts.iter().cloned(), Row::Declared)),
                None => Err(Error::not_derivable(format!("atom {} has no declared cuts", a.name))),
            },
            OrderTerm::LexSchedule(s) => {
                require_all(&self.check_side_conditions()?, &["regular"])?;
                schedule_spectrum(s)
            }
            OrderTerm::LexRefined(r) => {
                require_all(&self.check_side_conditions()?, &["regular", "phi-left", "phi-right"])?;
                refined_spectrum(r)
            }
            OrderTerm::Group(g) => g.order_spectrum(),
        }
    }

    /// Individual verdicts on the hypotheses of the two constructions.
    pub fn check_side_conditions(&self) -> Result<Vec<ConditionCheck>> {
        match self {
            OrderTerm::LexSchedule(s) => schedule_conditions(s),
            OrderTerm::LexRefined(r) => refined_conditions(r),
            t => Err(Error::domain(format!(
                "side conditions only exist for lexicographic constructions, not {t}"
            ))),
        }
    }

    pub fn completeness(&self) -> Result<Completeness> {
        let s = self.cut_spectrum()?;
        let symmetric_witness = s.symmetric_witness()?;
        let weak_witness = s.weak_witness()?;
        let ball_witness = s.nonprincipal_symmetric_witness()?;
        let strong = weak_witness.is_none();
        let extreme = strong
            && match (self.cf(), self.ci()) {
                (Ok(cf), Ok(ci)) => cf.is_uncountable() && ci.is_uncountable(),
                _ => false,
            };
        Ok(Completeness {
            predicates: Predicates {
                symmetric: symmetric_witness.is_none(),
                strong,
                extreme,
                spherical_balls: ball_witness.is_none(),
            },
            symmetric_witness,
            weak_witness,
            ball_witness,
        })
    }

    pub fn completeness_predicates(&self) -> Result<Predicates> {
        Ok(self.completeness()?.predicates)
    }

    /// Spherical completeness with respect to order balls, decided from the
    /// enumerated pairs below a bound instead of the family tags. Sound for
    /// spectra whose every family has a member below the bound.
    pub fn spherical_balls_by_enumeration(&self, bound: &Card) -> Result<bool> {
        let pairs = self.cut_spectrum()?.pairs_below(bound)?;
        Ok(pairs.iter().all(|p| p.is_principal() || p.is_asymmetric()))
    }
}

fn pairs<const N: usize>(ps: [(Card, Card); N], row: Row) -> CutSpectrum {
    CutSpectrum::from_pairs(ps.into_iter().map(|(l, r)| CofPair::new(l, r)), row)
}

fn require_all(checks: &[ConditionCheck], names: &[&str]) -> Result<()> {
    for c in checks {
        if names.contains(&c.name) && !c.passed {
            return Err(Error::SideCondition {
                condition: c.name.to_string(),
                witness: c.witness.clone().unwrap_or_default(),
            });
        }
    }
    Ok(())
}

fn schedule_spectrum(s: &LexSchedule) -> Result<CutSpectrum> {
    let (coin_i, cofin_i) = s.base.coin_cofin()?;
    let (kt, lt) = (&s.schedule.kappa, &s.schedule.lambda);
    let mut out = pairs([(Card::One, s.mu.clone()), (s.mu.clone(), Card::One)], Row::Principal);

    out.push(Family::new(
        Shape::RightRange {
            rights: coin_i.union(&CardSet::reg_below(&s.l0)),
            map: PairMap::Const(kt.first.clone()),
        },
        Row::FirstLevel,
    ));
    out.push(Family::new(
        Shape::LeftRange {
            lefts: cofin_i.union(&CardSet::reg_below(&s.k0)),
            map: PairMap::Const(lt.first.clone()),
        },
        Row::FirstLevel,
    ));

    // (κ_{ν+1}, λ) with λ < λ_ν and the mirror, over every run of
    // successor ordinals starting at 1 or at a limit.
    let mut runs = vec![(kt.finite_orbit(0), lt.finite_orbit(0))];
    if s.has_limits() {
        runs.push((kt.limit_orbit(0), lt.limit_orbit(0)));
    }
    for (k, l) in &runs {
        let next = |o: &super::Orbit| super::Orbit { offset: o.offset + 1, ..o.clone() };
        out.push(Family::new(
            Shape::Ladder { left: Rung::At(next(k)), right: Rung::Below(l.clone()) },
            Row::SuccessorBounded,
        ));
        out.push(Family::new(
            Shape::Ladder { left: Rung::Below(k.clone()), right: Rung::At(next(l)) },
            Row::SuccessorBounded,
        ));
    }

    // (κ_ν, λ_ν) at successor ν: ν = 1 on its own row, then ν = n + 2,
    // then λ + n + 1 after each limit λ.
    out.push(Family::pair(kt.first.clone(), lt.first.clone(), Row::DiagonalFirst));
    out.push(Family::new(
        Shape::Ladder { left: Rung::At(kt.finite_orbit(1)), right: Rung::At(lt.finite_orbit(1)) },
        Row::Diagonal,
    ));
    if s.has_limits() {
        out.push(Family::new(
            Shape::Ladder { left: Rung::At(kt.limit_orbit(1)), right: Rung::At(lt.limit_orbit(1)) },
            Row::Diagonal,
        ));
        // (κ_ν, μ') and (μ', λ_ν) at limits ν, μ' = cf(ν) ranging over Reg_{<μ}.
        out.push(Family::new(
            Shape::RightRange { rights: CardSet::reg_below(&s.mu), map: PairMap::Const(kt.limit.clone()) },
            Row::Limit,
        ));
        out.push(Family::new(
            Shape::LeftRange { lefts: CardSet::reg_below(&s.mu), map: PairMap::Const(lt.limit.clone()) },
            Row::Limit,
        ));
    }
    Ok(out)
}

fn refined_spectrum(r: &LexRefined) -> Result<CutSpectrum> {
    let mut out = pairs([(Card::One, r.mu.clone()), (r.mu.clone(), Card::One)], Row::Principal);
    out.push(Family::new(
        Shape::LeftRange { lefts: r.rl()?, map: PairMap::Phi(r.phir.clone()) },
        Row::Refined,
    ));
    out.push(Family::new(
        Shape::RightRange { rights: r.rr()?, map: PairMap::Phi(r.phil.clone()) },
        Row::Refined,
    ));
    Ok(out)
}

fn regularity(values: &[(&str, &Card)]) -> ConditionCheck {
    let bad = values
        .iter()
        .find(|(_, v)| !v.is_reg_infinite())
        .map(|(name, v)| format!("{name}={v}"));
    ConditionCheck::from_option("regular", bad)
}

fn schedule_conditions(s: &LexSchedule) -> Result<Vec<ConditionCheck>> {
    let (kt, lt) = (&s.schedule.kappa, &s.schedule.lambda);
    let reg = regularity(&[
        ("mu", &s.mu),
        ("k0", &s.k0),
        ("l0", &s.l0),
        ("k1", &kt.first),
        ("l1", &lt.first),
        ("klim", &kt.limit),
        ("llim", &lt.limit),
    ]);
    if !reg.passed {
        return Ok(vec![reg]);
    }
    let (coin_i, cofin_i) = s.base.coin_cofin()?;
    let mut out = vec![reg];

    let a = if coin_i.union(&CardSet::reg_below(&s.l0)).contains(&kt.first) {
        Some(format!("k1={} lies in Coin(I)+Reg<l0", kt.first))
    } else if cofin_i.union(&CardSet::reg_below(&s.k0)).contains(&lt.first) {
        Some(format!("l1={} lies in Cofin(I)+Reg<k0", lt.first))
    } else {
        None
    };
    out.push(ConditionCheck::from_option("a", a));

    // κ_{ν+1} ≥ λ_ν and λ_{ν+1} ≥ κ_ν, from ν = 0 on.
    let mut b = None;
    if kt.first < s.l0 {
        b = Some(format!("k1={} < l0={}", kt.first, s.l0));
    } else if lt.first < s.k0 {
        b = Some(format!("l1={} < k0={}", lt.first, s.k0));
    }
    let mut runs = vec![("", kt.finite_orbit(0), lt.finite_orbit(0))];
    if s.has_limits() {
        runs.push(("lim+", kt.limit_orbit(0), lt.limit_orbit(0)));
    }
    for (tag, k, l) in &runs {
        if b.is_some() {
            break;
        }
        let k1 = super::Orbit { offset: k.offset + 1, ..k.clone() };
        let l1 = super::Orbit { offset: l.offset + 1, ..l.clone() };
        if let Some(n) = first_n(&k1, l, |x, y| x < y) {
            b = Some(format!("k[{tag}{}]={} < l[{tag}{}]={}", n + 1, k1.at(n), n, l.at(n)));
        } else if let Some(n) = first_n(&l1, k, |x, y| x < y) {
            b = Some(format!("l[{tag}{}]={} < k[{tag}{}]={}", n + 1, l1.at(n), n, k.at(n)));
        }
    }
    out.push(ConditionCheck::from_option("b", b));

    let c = s
        .schedule
        .diagonal_collision(s.has_limits())
        .map(|v| format!("k=l={v} at a successor"));
    out.push(ConditionCheck::from_option("c", c));

    let d = if !s.has_limits() {
        None
    } else if kt.limit < s.mu {
        Some(format!("klim={} < mu={}", kt.limit, s.mu))
    } else if lt.limit < s.mu {
        Some(format!("llim={} < mu={}", lt.limit, s.mu))
    } else {
        None
    };
    out.push(ConditionCheck::from_option("d", d));

    out.push(ConditionCheck::from_option(
        "mu-uncountable",
        (!s.mu.is_uncountable()).then(|| format!("mu={}", s.mu)),
    ));
    Ok(out)
}

fn refined_conditions(r: &LexRefined) -> Result<Vec<ConditionCheck>> {
    let reg = regularity(&[("mu", &r.mu), ("k0", &r.k0), ("l0", &r.l0)]);
    if !reg.passed {
        return Ok(vec![reg]);
    }
    let (rl, rr) = (r.rl()?, r.rr()?);
    let mut out = vec![reg];
    let left = r
        .phil
        .image_escape(&rr, true, &rl)?
        .map(|k| format!("phil({k})={} not in Rl", r.phil.eval(&k).map(|v| v.to_string()).unwrap_or_default()));
    out.push(ConditionCheck::from_option("phi-left", left));
    let right = r
        .phir
        .image_escape(&rl, true, &rr)?
        .map(|k| format!("phir({k})={} not in Rr", r.phir.eval(&k).map(|v| v.to_string()).unwrap_or_default()));
    out.push(ConditionCheck::from_option("phi-right", right));

    let both = rl.union(&rr);
    let fixed = |phi: &super::PhiMap, name: &str| -> Result<Option<String>> {
        Ok(phi.fixed_point_in(&both)?.map(|k| format!("{name}({k})={k}")))
    };
    let ne = match fixed(&r.phil, "phil")? {
        Some(w) => Some(w),
        None => fixed(&r.phir, "phir")?,
    };
    out.push(ConditionCheck::from_option("distinct", ne));
    out.push(ConditionCheck::from_option(
        "mu-uncountable",
        (!r.mu.is_uncountable()).then(|| format!("mu={}", r.mu)),
    ));
    Ok(out)
}
