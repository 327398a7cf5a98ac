use std::time::Instant;

use subclone::oracle::suites::Suite;

fn run(suite: Suite) {
    let start = Instant::now();
    let log = suite.run().unwrap();
    let failed: Vec<&str> = log.iter().filter(|c| !c.agree).map(|c| c.name.as_str()).collect();
    eprintln!("{}: {} checks, {} failed, {:?}", suite.name(), log.len(), failed.len(), start.elapsed());
    assert!(!log.is_empty());
    assert!(failed.is_empty(), "{failed:?}");
}

#[test]
fn equiv_pairs() {
    run(Suite::EquivPairs);
}

#[test]
fn invariants() {
    run(Suite::Invariants);
}

#[test]
fn negatives() {
    run(Suite::Negatives);
}

#[test]
fn permutations() {
    run(Suite::Permutations);
}

#[test]
fn near_unanimity() {
    run(Suite::NearUnanimity);
}
