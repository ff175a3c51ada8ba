use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::chain::{ConcreteChain, Elem};
use crate::cardinals::{Card, CofPair};
use crate::error::{Error, Result};

/// One side of a cut: an extremal element, or a strictly monotone ladder
/// (increasing on the lower side, decreasing on the upper side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    Extremal(Elem),
    Ladder(Vec<Elem>),
}

impl Side {
    /// The cofinality tag this side exhibits.
    pub fn tag(&self) -> Card {
        match self {
            Side::Extremal(_) => Card::One,
            Side::Ladder(_) => Card::aleph0(),
        }
    }

    fn map(self, f: impl Fn(Elem) -> Elem) -> Side {
        match self {
            Side::Extremal(e) => Side::Extremal(f(e)),
            Side::Ladder(v) => Side::Ladder(v.into_iter().map(f).collect()),
        }
    }

    /// Rungs usable at a given depth; the extremal element counts as one.
    pub fn rungs(&self) -> &[Elem] {
        match self {
            Side::Extremal(e) => std::slice::from_ref(e),
            Side::Ladder(v) => v,
        }
    }
}

/// A finite description of a cut of a concrete chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutDesc {
    /// Lower part `(-∞, e]`.
    After(Elem),
    /// Lower part `(-∞, e)`.
    Before(Elem),
    /// The cut at `√k` in the rationals, `k` not a square.
    Irr(u32),
    /// Between the two summands.
    Mid,
    InLeft(Box<CutDesc>),
    InRight(Box<CutDesc>),
    InRev(Box<CutDesc>),
    /// Induced by a cut of the outer factor.
    Outer(Box<CutDesc>),
    /// A cut of the inner factor inside one fibre.
    Fiber(Elem, Box<CutDesc>),
}

impl fmt::Display for CutDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutDesc::After(e) => write!(f, "after({e})"),
            CutDesc::Before(e) => write!(f, "before({e})"),
            CutDesc::Irr(k) => write!(f, "sqrt({k})"),
            CutDesc::Mid => write!(f, "mid"),
            CutDesc::InLeft(c) => write!(f, "left.{c}"),
            CutDesc::InRight(c) => write!(f, "right.{c}"),
            CutDesc::InRev(c) => write!(f, "rev.{c}"),
            CutDesc::Outer(c) => write!(f, "outer.{c}"),
            CutDesc::Fiber(e, c) => write!(f, "fiber[{e}].{c}"),
        }
    }
}

/// A cut together with the cofinality pair it is claimed to realise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub name: String,
    pub lower: Side,
    pub upper: Side,
    pub claim: CofPair,
}

impl CutWitness {
    /// Materialises a described cut with ladders of length `depth`; the claim
    /// is read off the sides.
    pub fn from_cut(chain: &ConcreteChain, cut: &CutDesc, depth: usize) -> Result<Self> {
        let (lower, upper) = sides(chain, cut, depth)?;
        let claim = CofPair::new(lower.tag(), upper.tag());
        Ok(CutWitness { name: cut.to_string(), lower, upper, claim })
    }
}

fn rat(n: BigInt, d: BigInt) -> Elem {
    Elem::Num(BigRational::new(n, d))
}

fn step(n: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(n + 1))
}

fn lift_pair(outer: Side, fill: impl Fn(Elem) -> Side, inner: &ConcreteChain) -> Side {
    match outer {
        Side::Extremal(a) => fill(a.clone()).map(|b| Elem::pair(a.clone(), b)),
        Side::Ladder(xs) => Side::Ladder(xs.into_iter().map(|x| Elem::pair(x, inner.sample())).collect()),
    }
}

impl ConcreteChain {
    /// How the whole chain ends on the right.
    pub fn top(&self, depth: usize) -> Side {
        match self {
            ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Rat => {
                Side::Ladder((0..depth as i64).map(Elem::int).collect())
            }
            ConcreteChain::Finite(n) => Side::Extremal(Elem::int(*n as i64 - 1)),
            ConcreteChain::Rev(c) => c.bottom(depth),
            ConcreteChain::Sum(_, b) => b.top(depth).map(|e| Elem::Right(Box::new(e))),
            ConcreteChain::Lex(a, b) => lift_pair(a.top(depth), |_| b.top(depth), b),
        }
    }

    /// How the whole chain ends on the left.
    pub fn bottom(&self, depth: usize) -> Side {
        match self {
            ConcreteChain::Int | ConcreteChain::Rat => Side::Ladder((0..depth as i64).map(|n| Elem::int(-n)).collect()),
            ConcreteChain::Nat | ConcreteChain::Finite(_) => Side::Extremal(Elem::int(0)),
            ConcreteChain::Rev(c) => c.top(depth),
            ConcreteChain::Sum(a, _) => a.bottom(depth).map(|e| Elem::Left(Box::new(e))),
            ConcreteChain::Lex(a, b) => lift_pair(a.bottom(depth), |_| b.bottom(depth), b),
        }
    }

    /// Upper side of the cut whose lower part is `(-∞, e]`.
    pub fn upper_of(&self, e: &Elem, depth: usize) -> Result<Side> {
        self.require(e)?;
        if self.is_max(e) {
            return Err(Error::domain(format!("{e} is the maximum of {self}")));
        }
        Ok(match (self, e) {
            (ConcreteChain::Rat, Elem::Num(r)) => Side::Ladder((0..depth).map(|n| Elem::Num(r + step(n))).collect()),
            (ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Finite(_), _) => {
                Side::Extremal(self.succ(e).expect("non-maximal integer"))
            }
            (ConcreteChain::Rev(c), e) => c.lower_of(e, depth)?,
            (ConcreteChain::Sum(a, b), Elem::Left(x)) => {
                if a.is_max(x) {
                    b.bottom(depth).map(|y| Elem::Right(Box::new(y)))
                } else {
                    a.upper_of(x, depth)?.map(|y| Elem::Left(Box::new(y)))
                }
            }
            (ConcreteChain::Sum(_, b), Elem::Right(y)) => b.upper_of(y, depth)?.map(|z| Elem::Right(Box::new(z))),
            (ConcreteChain::Lex(a, b), Elem::Pair(x, y)) => {
                if !b.is_max(y) {
                    b.upper_of(y, depth)?.map(|z| Elem::pair((**x).clone(), z))
                } else {
                    lift_pair(a.upper_of(x, depth)?, |_| b.bottom(depth), b)
                }
            }
            _ => unreachable!("membership checked"),
        })
    }

    /// Lower side of the cut whose upper part is `[e, ∞)`.
    pub fn lower_of(&self, e: &Elem, depth: usize) -> Result<Side> {
        self.require(e)?;
        if self.is_min(e) {
            return Err(Error::domain(format!("{e} is the minimum of {self}")));
        }
        Ok(match (self, e) {
            (ConcreteChain::Rat, Elem::Num(r)) => Side::Ladder((0..depth).map(|n| Elem::Num(r - step(n))).collect()),
            (ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Finite(_), _) => {
                Side::Extremal(self.pred(e).expect("non-minimal integer"))
            }
            (ConcreteChain::Rev(c), e) => c.upper_of(e, depth)?,
            (ConcreteChain::Sum(a, b), Elem::Right(y)) => {
                if b.is_min(y) {
                    a.top(depth).map(|x| Elem::Left(Box::new(x)))
                } else {
                    b.lower_of(y, depth)?.map(|z| Elem::Right(Box::new(z)))
                }
            }
            (ConcreteChain::Sum(a, _), Elem::Left(x)) => a.lower_of(x, depth)?.map(|z| Elem::Left(Box::new(z))),
            (ConcreteChain::Lex(a, b), Elem::Pair(x, y)) => {
                if !b.is_min(y) {
                    b.lower_of(y, depth)?.map(|z| Elem::pair((**x).clone(), z))
                } else {
                    lift_pair(a.lower_of(x, depth)?, |_| b.top(depth), b)
                }
            }
            _ => unreachable!("membership checked"),
        })
    }

    /// A few members spread over the chain.
    pub fn sample_points(&self) -> Vec<Elem> {
        match self {
            ConcreteChain::Nat => [0, 1, 7].map(Elem::int).to_vec(),
            ConcreteChain::Int => [-2, 0, 3].map(Elem::int).to_vec(),
            ConcreteChain::Rat => vec![Elem::int(0), rat(1.into(), 2.into()), Elem::int(-3)],
            ConcreteChain::Finite(n) => (0..(*n).min(5) as i64).map(Elem::int).collect(),
            ConcreteChain::Rev(c) => c.sample_points(),
            ConcreteChain::Sum(a, b) => a
                .sample_points()
                .into_iter()
                .map(|x| Elem::Left(Box::new(x)))
                .chain(b.sample_points().into_iter().map(|y| Elem::Right(Box::new(y))))
                .collect(),
            ConcreteChain::Lex(a, b) => {
                let (xs, ys) = (a.sample_points(), b.sample_points());
                xs.iter()
                    .take(2)
                    .flat_map(|x| ys.iter().take(2).map(move |y| Elem::pair(x.clone(), y.clone())))
                    .collect()
            }
        }
    }

    fn point_cuts(&self) -> Vec<CutDesc> {
        let mut out = Vec::new();
        for e in self.sample_points() {
            if !self.is_max(&e) {
                out.push(CutDesc::After(e.clone()));
            }
            if !self.is_min(&e) {
                out.push(CutDesc::Before(e));
            }
        }
        out
    }

    fn structural_cuts(&self) -> Vec<CutDesc> {
        let b = |c: CutDesc| Box::new(c);
        match self {
            ConcreteChain::Rat => vec![CutDesc::Irr(2), CutDesc::Irr(3)],
            ConcreteChain::Nat | ConcreteChain::Int | ConcreteChain::Finite(_) => vec![],
            ConcreteChain::Rev(c) => c.structural_cuts().into_iter().map(|x| CutDesc::InRev(b(x))).collect(),
            ConcreteChain::Sum(l, r) => std::iter::once(CutDesc::Mid)
                .chain(l.structural_cuts().into_iter().map(|x| CutDesc::InLeft(b(x))))
                .chain(r.structural_cuts().into_iter().map(|x| CutDesc::InRight(b(x))))
                .collect(),
            ConcreteChain::Lex(outer, inner) => {
                let mut out: Vec<CutDesc> = outer
                    .point_cuts()
                    .into_iter()
                    .chain(outer.structural_cuts())
                    .map(|x| CutDesc::Outer(b(x)))
                    .collect();
                for a in outer.sample_points().into_iter().take(2) {
                    out.extend(inner.structural_cuts().into_iter().map(|x| CutDesc::Fiber(a.clone(), b(x))));
                }
                out
            }
        }
    }

    /// Point cuts at sample members plus every structural kind of cut.
    pub fn sample_cuts(&self) -> Vec<CutDesc> {
        let mut out = self.point_cuts();
        out.extend(self.structural_cuts());
        out
    }
}

fn sqrt_ladders(k: u32, depth: usize) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let kk = BigInt::from(k);
    if kk.sqrt().pow(2) == kk {
        return Err(Error::domain(format!("{k} is a perfect square")));
    }
    let (mut lo, mut hi): (Vec<Elem>, Vec<Elem>) = (Vec::new(), Vec::new());
    let mut bits = 0u32;
    while lo.len() < depth || hi.len() < depth {
        let scale = BigInt::one() << bits;
        let root = (&kk * &scale * &scale).sqrt();
        let l = rat(root.clone(), scale.clone());
        let h = rat(root + 1, scale);
        if lo.last() != Some(&l) && lo.len() < depth {
            lo.push(l);
        }
        if hi.last() != Some(&h) && hi.len() < depth {
            hi.push(h);
        }
        bits += 1;
    }
    Ok((lo, hi))
}

/// Both sides of a described cut.
pub fn sides(chain: &ConcreteChain, cut: &CutDesc, depth: usize) -> Result<(Side, Side)> {
    let bad = || Error::domain(format!("cut {cut} does not apply to {chain}"));
    let left = |e: Elem| Elem::Left(Box::new(e));
    let right = |e: Elem| Elem::Right(Box::new(e));
    match (chain, cut) {
        (_, CutDesc::After(e)) => Ok((Side::Extremal(e.clone()), chain.upper_of(e, depth)?)),
        (_, CutDesc::Before(e)) => Ok((chain.lower_of(e, depth)?, Side::Extremal(e.clone()))),
        (ConcreteChain::Rat, CutDesc::Irr(k)) => {
            let (lo, hi) = sqrt_ladders(*k, depth)?;
            Ok((Side::Ladder(lo), Side::Ladder(hi)))
        }
        (ConcreteChain::Sum(a, b), CutDesc::Mid) => Ok((a.top(depth).map(left), b.bottom(depth).map(right))),
        (ConcreteChain::Sum(a, _), CutDesc::InLeft(c)) => {
            let (l, u) = sides(a, c, depth)?;
            Ok((l.map(left), u.map(left)))
        }
        (ConcreteChain::Sum(_, b), CutDesc::InRight(c)) => {
            let (l, u) = sides(b, c, depth)?;
            Ok((l.map(right), u.map(right)))
        }
        (ConcreteChain::Rev(inner), CutDesc::InRev(c)) => {
            let (l, u) = sides(inner, c, depth)?;
            Ok((u, l))
        }
        (ConcreteChain::Lex(a, b), CutDesc::Outer(c)) => {
            let (l, u) = sides(a, c, depth)?;
            Ok((lift_pair(l, |_| b.top(depth), b), lift_pair(u, |_| b.bottom(depth), b)))
        }
        (ConcreteChain::Lex(a, b), CutDesc::Fiber(x, c)) => {
            a.require(x)?;
            let (l, u) = sides(b, c, depth)?;
            let wrap = |y: Elem| Elem::pair(x.clone(), y);
            Ok((l.map(wrap), u.map(wrap)))
        }
        _ => Err(bad()),
    }
}
