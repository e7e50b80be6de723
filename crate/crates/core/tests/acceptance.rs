//! Full acceptance suite: one pass/fail line per criterion.

use pretzel_cg::acceptance::{self, CriterionResult};
use pretzel_cg::verdict::AnalyzeOptions;

fn report(r: &CriterionResult) {
    let tag = if r.passed { "PASS" } else { "FAIL" };
    eprintln!("[{tag}] {}: {}", r.name, r.detail);
    assert!(r.passed, "{}: {}", r.name, r.detail);
}

#[test]
fn criterion_01_odd_classification_scan() {
    report(&acceptance::criterion_1(&AnalyzeOptions::default()));
}

#[test]
fn criterion_02_ks_family() {
    report(&acceptance::criterion_2(Default::default()));
}

#[test]
fn criterion_03_cross_route_exactness() {
    report(&acceptance::criterion_3(Default::default()));
}

#[test]
fn criterion_04_torus_signature_oracle() {
    report(&acceptance::criterion_4(Default::default()));
}

#[test]
fn criterion_05_divisibility_suites() {
    report(&acceptance::criterion_5(&AnalyzeOptions::default()));
}

#[test]
fn criterion_06_named_fixtures() {
    report(&acceptance::criterion_6(&AnalyzeOptions::default()));
}

#[test]
fn criterion_07_cover_homology_agreement() {
    report(&acceptance::criterion_7());
}

#[test]
fn criterion_08_classical_suite() {
    report(&acceptance::criterion_8(&AnalyzeOptions::default()));
}

#[test]
fn criterion_09_even_classification_scan() {
    report(&acceptance::criterion_9(&AnalyzeOptions::default()));
}

#[test]
fn criterion_10_representative_independence() {
    report(&acceptance::criterion_10(Default::default()));
}
