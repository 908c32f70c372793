//! One line per acceptance criterion; the test fails if any criterion does.

use std::io::Write;

use spingeo::selftest::{criterion_count, run_all, DEFAULT_SEED};

// Writes straight to stdout so the lines show up without `--nocapture`.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

#[test]
fn acceptance() {
    let results = run_all(DEFAULT_SEED);
    assert_eq!(results.len(), criterion_count());
    emit("");
    for r in &results {
        emit(&r.to_string());
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn acceptance_other_seeds() {
    for seed in [1, 2] {
        let failed: Vec<String> = run_all(seed).iter().filter(|r| !r.passed).map(|r| r.to_string()).collect();
        assert!(failed.is_empty(), "seed {seed}: {failed:#?}");
    }
}
