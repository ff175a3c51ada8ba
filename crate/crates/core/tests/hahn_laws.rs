mod common;

use std::time::Instant;

use common::laws::{hahn_laws, series_laws, LawTally};

fn assert_clean(tallies: &[LawTally]) {
    for t in tallies {
        assert_eq!(t.failures, 0, "{} {}: {:?}", t.family, t.law, t.first_failure);
    }
}

#[test]
fn element_laws_hold_on_every_chain_family() {
    let start = Instant::now();
    let tallies = hahn_laws(10_000, 7);
    assert_eq!(tallies.len(), 32);
    assert!(tallies.iter().all(|t| t.cases == 10_000));
    assert_clean(&tallies);
    eprintln!("element laws: {:?}", start.elapsed());
}

#[test]
fn series_laws_hold() {
    let tallies = series_laws(10_000, 11);
    assert!(tallies.iter().all(|t| t.cases == 10_000));
    assert_clean(&tallies);
}
