//! Acceptance battery: one test per criterion, each printing its pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! table.

use orlicz_core::suite;

const SEED: u64 = 0xacce_57ed;

fn check(outcome: suite::CriterionOutcome) {
    println!("{}", outcome.line());
    assert!(outcome.pass, "{}", outcome.line());
}

#[test]
fn c01_index_recovery() {
    check(suite::criterion_01_index_recovery(SEED));
}

#[test]
fn c02_phi_theta_fixed_point() {
    check(suite::criterion_02_phi_theta_fixed_point(SEED));
}

#[test]
fn c03_phi_theta_power_law() {
    check(suite::criterion_03_phi_theta_power_law(SEED));
}

#[test]
fn c04_exponent_transform() {
    check(suite::criterion_04_exponent_transform(SEED));
}

#[test]
fn c05_widom_identity() {
    check(suite::criterion_05_widom(SEED));
}

#[test]
fn c06_shift_invariance() {
    check(suite::criterion_06_shift_invariance(SEED));
}

#[test]
fn c07_l2_multiplier_norm() {
    check(suite::criterion_07_l2_multiplier(SEED));
}

#[test]
fn c08_luxemburg_norm_properties() {
    check(suite::criterion_08_luxemburg(SEED));
}

#[test]
fn c09_interpolation_inequality() {
    check(suite::criterion_09_interpolation(SEED));
}

#[test]
fn c10_calderon_factorization() {
    check(suite::criterion_10_calderon(SEED));
}

#[test]
fn c11_localisation_end_to_end() {
    check(suite::criterion_11_localisation(SEED));
}

#[test]
fn c12_bump_family() {
    check(suite::criterion_12_bump_family(SEED));
}

#[test]
fn c13_hull_oracle() {
    check(suite::criterion_13_hull_oracle(SEED));
}
