#![allow(dead_code)]

use std::path::PathBuf;

use symcomplete::cardinals::{Card, CofPair};
use symcomplete::cli::{parse_definitions, Value};
use symcomplete::order_terms::OrderTerm;
use symcomplete::struct_classify::{cut_path, valuation_path, Components, GroupDescriptor};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn terms_of(file: &str) -> Vec<(String, OrderTerm)> {
    parse_definitions(&read_fixture(file))
        .unwrap()
        .into_iter()
        .filter_map(|d| match d.value {
            Value::Term(t) => Some((d.name, t)),
            _ => None,
        })
        .collect()
}

/// The shared pool of order terms.
pub fn pool() -> Vec<(String, OrderTerm)> {
    terms_of("fixtures/pool.sc")
}

pub fn a(n: u64) -> Card {
    Card::aleph(n)
}

pub fn pair(l: Card, r: Card) -> CofPair {
    CofPair::new(l, r)
}

/// Every descriptor shape over a value set that the constructor accepts.
pub fn descriptors_over(vset: &OrderTerm) -> Vec<GroupDescriptor> {
    let mut out = Vec::new();
    for comp in [Components::Reals, Components::IntsAtTop, Components::Dense] {
        for spherical in [true, false] {
            for discrete in [true, false] {
                for divisible in [true, false] {
                    if let Ok(g) = GroupDescriptor::new(vset.clone(), comp, spherical, discrete, divisible) {
                        if !out.contains(&g) {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    out
}
pub mod cli;
pub mod laws;

/// Deterministic random terms: pool members under rev, sum and lex.
pub fn random_terms(n: usize, seed: u64) -> Vec<OrderTerm> {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    fn go(pool: &[OrderTerm], rng: &mut StdRng, depth: u32) -> OrderTerm {
        if depth == 0 || rng.gen_bool(0.4) {
            return pool[rng.gen_range(0..pool.len())].clone();
        }
        match rng.gen_range(0..3) {
            0 => OrderTerm::rev(go(pool, rng, depth - 1)),
            1 => OrderTerm::sum(go(pool, rng, depth - 1), go(pool, rng, depth - 1)),
            _ => OrderTerm::lex(go(pool, rng, depth - 1), go(pool, rng, depth - 1)),
        }
    }
    let pool: Vec<OrderTerm> = pool().into_iter().map(|(_, t)| t).collect();
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n).map(|_| go(&pool, &mut rng, 2)).collect()
}

/// Deterministic random descriptors over random value sets, drawn among the
/// shapes the constructor accepts.
pub fn random_descriptors(n: usize, seed: u64) -> Vec<GroupDescriptor> {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut vsets = random_terms(4 * n, seed ^ 0x5eed).into_iter();
    while out.len() < n {
        let Some(vset) = vsets.next() else { break };
        let comp = [Components::Reals, Components::IntsAtTop, Components::Dense][rng.gen_range(0..3)];
        let spherical = rng.gen_bool(0.7);
        if let Ok(g) = GroupDescriptor::new(vset.clone(), comp, spherical, rng.gen(), rng.gen()) {
            out.push(g);
        } else if let Ok(g) = GroupDescriptor::new(vset, comp, spherical, true, false) {
            out.push(g);
        }
    }
    out
}

#[derive(Debug, Default)]
pub struct PathTally {
    pub compared: usize,
    pub disagreements: Vec<String>,
    /// Descriptors where either path is not derivable.
    pub underived: usize,
}

/// Compares the valuation path with the cut path on spherical descriptors.
pub fn two_path_tally<'a>(descs: impl IntoIterator<Item = &'a GroupDescriptor>) -> PathTally {
    let mut t = PathTally::default();
    for g in descs.into_iter().filter(|g| g.spherical && !g.is_trivial()) {
        match (valuation_path(g), cut_path(g)) {
            (Ok(x), Ok(y)) => {
                t.compared += 1;
                if x != y {
                    t.disagreements.push(format!("{g}: {x:?} vs {y:?}"));
                }
            }
            (Err(_), Err(_)) => t.underived += 1,
            (x, y) => t.disagreements.push(format!("{g}: {x:?} vs {y:?}")),
        }
    }
    t
}
