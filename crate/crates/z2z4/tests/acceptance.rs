//! End-to-end acceptance: one test per criterion in the shared checklist,
//! each printing its single pass/fail line (visible with --nocapture, or on
//! failure).

use z2z4::suite;

fn run(id: usize) {
    let result = suite::run(id);
    println!("{}", result.render());
    assert!(result.passed, "\n{}", result.render());
}

#[test]
fn criterion_01_cyclic_perfect_code() {
    run(1);
}

#[test]
fn criterion_02_dual_structure() {
    run(2);
}

#[test]
fn criterion_03_gray_image() {
    run(3);
}

#[test]
fn criterion_04_type_formulas() {
    run(4);
}

#[test]
fn criterion_05_divisibility_pattern() {
    run(5);
}

#[test]
fn criterion_06_extended_codes() {
    run(6);
}

#[test]
fn criterion_07_extended_binary_hamming() {
    run(7);
}

#[test]
fn criterion_08_counting_audits() {
    run(8);
}

#[test]
fn criterion_09_closure_search() {
    run(9);
}

#[test]
fn criterion_10_cross_validation() {
    run(10);
}
