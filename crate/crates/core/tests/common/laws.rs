use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use symcomplete::hahn_concrete::{BallRelation, HahnElement, IndexChain, Point, SeriesElement, UltraBall, Val};

/// Failure counts for one law on one family.
#[derive(Debug, Clone)]
pub struct LawTally {
    pub family: String,
    pub law: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl LawTally {
    fn new(family: &str, law: &'static str) -> Self {
        Self { family: family.to_string(), law, cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }
}

pub fn chain_families() -> Vec<IndexChain> {
    vec![
        IndexChain::Finite(6),
        IndexChain::Integers,
        IndexChain::Rationals,
        IndexChain::Lex(vec![IndexChain::Integers, IndexChain::Finite(3)]),
    ]
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn coeff(rng: &mut StdRng) -> BigRational {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-9..=9);
    }
    rat(p, rng.gen_range(1..=4))
}

fn point(chain: &IndexChain, rng: &mut StdRng) -> Point {
    match chain {
        IndexChain::Finite(n) => Point::Nat(rng.gen_range(0..*n)),
        IndexChain::Integers => Point::Int(BigInt::from(rng.gen_range(-5..=5))),
        IndexChain::Rationals => Point::Rat(rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))),
        IndexChain::Lex(cs) => Point::Tuple(cs.iter().map(|c| point(c, rng)).collect()),
    }
}

pub fn element(chain: &IndexChain, rng: &mut StdRng) -> HahnElement {
    let n = rng.gen_range(0..=4);
    let terms: Vec<_> = (0..n).map(|_| (point(chain, rng), coeff(rng))).collect();
    HahnElement::new(chain.clone(), terms).unwrap()
}

fn nonzero(chain: &IndexChain, rng: &mut StdRng) -> HahnElement {
    loop {
        let x = element(chain, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Valuation read straight off the support, independent of the element's
/// own valuation routine.
fn support_min(x: &HahnElement) -> Val<Point> {
    x.coeffs().support().min().cloned().map_or(Val::Infinity, Val::Fin)
}

fn sign_by_leading(x: &HahnElement) -> Ordering {
    let lead = x.coeffs().support().min().cloned();
    match lead {
        None => Ordering::Equal,
        Some(p) => x.coeffs().coeff(&p).cmp(&rat(0, 1)),
    }
}

/// Whether `n|a| ≥ |b|` for some `n ≤ 2^24`, found by doubling `n`.
fn dominates(a: &HahnElement, b: &HahnElement) -> bool {
    let (a, b) = (a.abs(), b.abs());
    let mut n = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    for _ in 0..=24 {
        if a.scale(&n).compare(&b).unwrap() != Ordering::Less {
            return true;
        }
        n *= &two;
    }
    false
}

/// Runs every element law `cases` times on every chain family.
pub fn hahn_laws(cases: usize, seed: u64) -> Vec<LawTally> {
    let mut out = Vec::new();
    for chain in chain_families() {
        let fam = chain.to_string();
        let mut rng = StdRng::seed_from_u64(seed ^ fam.len() as u64);
        let mut ut = LawTally::new(&fam, "ultrametric_triangle");
        let mut compat = LawTally::new(&fam, "order_compatibility");
        let mut ball_nest = LawTally::new(&fam, "ball_nesting");
        let mut ball_center = LawTally::new(&fam, "ball_center");
        let mut ball_coset = LawTally::new(&fam, "ball_coset");
        let mut arch = LawTally::new(&fam, "arch_equiv_iff_equal_valuation");
        let mut translate = LawTally::new(&fam, "translation_invariance");
        let mut val = LawTally::new(&fam, "valuation_is_support_min");
        for _ in 0..cases {
            let a = element(&chain, &mut rng);
            // Bias towards shared leading terms so the equality branch of
            // the triangle law gets exercised.
            let b = if rng.gen_bool(0.3) { a.neg().add(&element(&chain, &mut rng)).unwrap() } else { element(&chain, &mut rng) };
            let c = element(&chain, &mut rng);
            let (va, vb) = (a.nat_valuation(), b.nat_valuation());
            val.record(va == support_min(&a) && a.signum() == sign_by_leading(&a), || format!("{a}"));

            let vs = a.add(&b).unwrap().nat_valuation();
            let ok = if va != vb { vs == va.clone().min(vb.clone()) } else { vs >= va };
            ut.record(ok, || format!("a={a} b={b}"));

            let (lo, hi) = (a.abs(), a.abs().add(&b.abs()).unwrap());
            let ok = lo.nat_valuation() >= hi.nat_valuation();
            compat.record(ok, || format!("0<={lo}<={hi}"));

            let ok = a.compare(&b).unwrap() == a.add(&c).unwrap().compare(&b.add(&c).unwrap()).unwrap();
            translate.record(ok, || format!("a={a} b={b} c={c}"));

            let (x, y) = (nonzero(&chain, &mut rng), nonzero(&chain, &mut rng));
            let by_search = dominates(&x, &y) && dominates(&y, &x);
            let ok = x.arch_equiv(&y).unwrap() == by_search && by_search == (support_min(&x) == support_min(&y));
            arch.record(ok, || format!("x={x} y={y}"));

            let d = element(&chain, &mut rng);
            let (b1, b2) = (UltraBall::new(&a, &b).unwrap(), UltraBall::new(&c, &d).unwrap());
            let rel = b1.relation(&b2).unwrap();
            let probe = element(&chain, &mut rng);
            let (in1, in2) = (b1.contains(&probe).unwrap(), b2.contains(&probe).unwrap());
            let ok = match rel {
                BallRelation::Disjoint => !(in1 && in2),
                BallRelation::Equal => in1 == in2,
                BallRelation::Inside => !in1 || in2,
                BallRelation::Contains => !in2 || in1,
            } && (rel == BallRelation::Disjoint) == (!b1.contains(&c).unwrap() && !b2.contains(&a).unwrap());
            ball_nest.record(ok, || format!("B({a},{b}) B({c},{d}) probe={probe} {rel:?}"));

            // Any member is a center: moving the center to b keeps the ball.
            let moved = UltraBall { center: b.clone(), radius: b1.radius.clone() };
            let ok = b1.contains(&b).unwrap()
                && moved.contains(&probe).unwrap() == in1
                && moved.relation(&b1).unwrap() == BallRelation::Equal;
            ball_center.record(ok, || format!("B({a},{b}) probe={probe}"));

            let shifted = UltraBall::new(&a.add(&c).unwrap(), &b.add(&c).unwrap()).unwrap();
            let ok = shifted.radius == b1.radius && shifted.contains(&probe.add(&c).unwrap()).unwrap() == in1;
            ball_coset.record(ok, || format!("B({a},{b})+{c} probe={probe}"));
        }
        out.extend([ut, compat, ball_nest, ball_center, ball_coset, arch, translate, val]);
    }
    out
}

fn series(dim: usize, rng: &mut StdRng) -> SeriesElement {
    let n = rng.gen_range(0..=4);
    let terms: Vec<_> = (0..n)
        .map(|_| ((0..dim).map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=2))).collect(), coeff(rng)))
        .collect();
    SeriesElement::new(dim, terms).unwrap()
}

fn exp_add(a: &Val<Vec<BigRational>>, b: &Val<Vec<BigRational>>) -> Val<Vec<BigRational>> {
    match (a, b) {
        (Val::Fin(x), Val::Fin(y)) => Val::Fin(x.iter().zip(y).map(|(p, q)| p + q).collect()),
        _ => Val::Infinity,
    }
}

/// Field laws of power series over `ℚ^dim` exponents.
pub fn series_laws(cases: usize, seed: u64) -> Vec<LawTally> {
    let mut out = Vec::new();
    for dim in [1usize, 2] {
        let fam = format!("series(q^{dim})");
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(dim as u64));
        let mut mult = LawTally::new(&fam, "valuation_multiplicative");
        let mut ring = LawTally::new(&fam, "ring_laws");
        let mut ut = LawTally::new(&fam, "ultrametric_triangle");
        let mut order = LawTally::new(&fam, "product_of_positives");
        for _ in 0..cases {
            let (a, b, c) = (series(dim, &mut rng), series(dim, &mut rng), series(dim, &mut rng));
            let ab = a.mul(&b).unwrap();
            let ok = ab.nat_valuation() == exp_add(&a.nat_valuation(), &b.nat_valuation());
            mult.record(ok, || format!("a={a} b={b}"));

            let ok = ab == b.mul(&a).unwrap()
                && ab.mul(&c).unwrap() == a.mul(&b.mul(&c).unwrap()).unwrap()
                && a.mul(&b.add(&c).unwrap()).unwrap() == ab.add(&a.mul(&c).unwrap()).unwrap()
                && a.mul(&SeriesElement::one(dim)).unwrap() == a;
            ring.record(ok, || format!("a={a} b={b} c={c}"));

            let (va, vb) = (a.nat_valuation(), b.nat_valuation());
            let vs = a.add(&b).unwrap().nat_valuation();
            let ok = if va != vb { vs == va.clone().min(vb.clone()) } else { vs >= va };
            ut.record(ok, || format!("a={a} b={b}"));

            let ok = ab.signum() == product_sign(a.signum(), b.signum());
            order.record(ok, || format!("a={a} b={b}"));
        }
        out.extend([mult, ring, ut, order]);
    }
    out
}

fn product_sign(a: Ordering, b: Ordering) -> Ordering {
    use Ordering::*;
    match (a, b) {
        (Equal, _) | (_, Equal) => Equal,
        (x, y) if x == y => Greater,
        _ => Less,
    }
}
