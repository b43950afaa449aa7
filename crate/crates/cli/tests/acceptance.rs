//! One test per acceptance criterion. Each writes its summary line straight
//! to stderr so the verdicts show up even when output capture is on.

use std::io::Write;

use amodlab_cli::criteria::{self, Context};

fn check(id: u32) {
    let criterion = criteria::by_id(id);
    let result = criterion.run(&Context::default(), true);
    let mut report = result.summary_line();
    report.push('\n');
    for failure in &result.failures {
        report.push_str(&format!("    {failure}\n"));
    }
    if result.failure_count > result.failures.len() {
        report.push_str(&format!("    ... {} more\n", result.failure_count - result.failures.len()));
    }
    let _ = std::io::stderr().write_all(report.as_bytes());
    assert!(result.passed, "criterion {id} ({}) failed", criterion.name);
}

#[test]
fn criterion_01_torsion_spectra() {
    check(1);
}

#[test]
fn criterion_02_lcm_claim() {
    check(2);
}

#[test]
fn criterion_03_element_order() {
    check(3);
}

#[test]
fn criterion_04_min_related() {
    check(4);
}

#[test]
fn criterion_05_descending_link() {
    check(5);
}

#[test]
fn criterion_06_sphere_witness() {
    check(6);
}

#[test]
fn criterion_07_fundamental_domain() {
    check(7);
}

#[test]
fn criterion_08_morse() {
    check(8);
}

#[test]
fn criterion_09_dimension_bound() {
    check(9);
}

#[test]
fn criterion_10_census() {
    check(10);
}

#[test]
fn criterion_11_flagness() {
    check(11);
}

#[test]
fn criterion_12_presentation() {
    check(12);
}

#[test]
fn criterion_13_homology() {
    check(13);
}
