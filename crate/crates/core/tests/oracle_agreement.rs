mod common;

use common::terms_of;
use symcomplete::cardinals::{Card, CofPair};
use symcomplete::oracle::{concretize, spectrum_soundness, verify_witness, CutWitness, Side};

const DEPTH: usize = 100;

#[test]
fn countable_fixture_is_witnessed_at_full_depth() {
    let terms = terms_of("fixtures/countable.sc");
    assert!(terms.len() >= 20);
    for (name, t) in &terms {
        let r = spectrum_soundness(t, DEPTH).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(r.passed(), "{name}:\n{r}");
        let claimed = t.cut_spectrum().unwrap().countable_pairs().unwrap();
        assert_eq!(r.witnessed(), claimed, "{name}");
        assert!(r.lines.iter().all(|l| l.claimed), "{name}: unclaimed pair\n{r}");
    }
}

#[test]
fn acceptance_is_monotone_in_depth() {
    for (name, t) in terms_of("fixtures/countable.sc") {
        let chain = concretize(&t).unwrap();
        for cut in chain.sample_cuts() {
            let w = CutWitness::from_cut(&chain, &cut, 40).unwrap();
            if !verify_witness(&chain, &w, 40).passed() {
                continue;
            }
            for d in 1..40 {
                assert!(verify_witness(&chain, &w, d).passed(), "{name} {cut} at depth {d}");
            }
        }
    }
}

fn retag(side: &Side) -> Side {
    match side {
        Side::Extremal(e) => Side::Ladder(vec![e.clone()]),
        Side::Ladder(xs) => Side::Extremal(xs[0].clone()),
    }
}

/// Broken witnesses must be rejected.
#[test]
fn tampered_witnesses_fail() {
    let mut rejected = 0;
    for (name, t) in terms_of("fixtures/countable.sc") {
        let chain = concretize(&t).unwrap();
        for cut in chain.sample_cuts() {
            let w = CutWitness::from_cut(&chain, &cut, 20).unwrap();
            if !verify_witness(&chain, &w, 20).passed() {
                continue;
            }
            let swapped = CofPair::new(w.claim.right.clone(), w.claim.left.clone());
            let mut bad = vec![CutWitness { lower: retag(&w.lower), ..w.clone() }];
            if swapped != w.claim {
                bad.push(CutWitness { claim: swapped, ..w.clone() });
            }
            bad.push(CutWitness { lower: w.upper.clone(), upper: w.lower.clone(), ..w.clone() });
            if let Side::Ladder(xs) = &w.upper {
                let mut ys = xs.clone();
                ys.truncate(5);
                bad.push(CutWitness { upper: Side::Ladder(ys), ..w.clone() });
                let mut zs = xs.clone();
                zs.reverse();
                bad.push(CutWitness { upper: Side::Ladder(zs), ..w.clone() });
            }
            for b in bad {
                assert!(!verify_witness(&chain, &b, 20).passed(), "{name} {cut}: accepted {:?}", b.claim);
                rejected += 1;
            }
        }
    }
    assert!(rejected > 100);
}

#[test]
fn chain_ends_match_the_term() {
    for (name, t) in terms_of("fixtures/countable.sc") {
        let r = spectrum_soundness(&t, 30).unwrap();
        assert_eq!(r.cf.0, r.cf.1, "{name} cf");
        assert_eq!(r.ci.0, r.ci.1, "{name} ci");
        assert!(r.cf.0 == Card::One || r.cf.0 == Card::aleph0());
    }
}
