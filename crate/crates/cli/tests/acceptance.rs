//! Acceptance suite: one test per promised behavior of the engine, each
//! printing a pass/fail line.  Run with `cargo test --test acceptance`.
//!
//! Every criterion runs against the default weights plus three generic
//! weight vectors derived from seed 0, exactly as `quintic-mirror
//! selfcheck` does.

use std::sync::OnceLock;

use quintic_mirror::selfcheck::{run_criterion, SelfcheckConfig};
use quintic_mirror_cli::seeded_generic_specs;

fn shared_config() -> &'static SelfcheckConfig {
    static CONFIG: OnceLock<SelfcheckConfig> = OnceLock::new();
    CONFIG.get_or_init(|| {
        let mut sink = std::io::sink();
        let extra_alphas = seeded_generic_specs(0, 3, &mut sink).expect("seeded generic weights");
        SelfcheckConfig {
            extra_alphas,
            ..SelfcheckConfig::default()
        }
    })
}

fn check(index: usize) {
    let outcome = run_criterion(index, shared_config());
    eprintln!(
        "criterion {:2} ({}): {} [{} ms] {}",
        outcome.index,
        outcome.name,
        if outcome.passed { "pass" } else { "FAIL" },
        outcome.millis,
        outcome.detail
    );
    assert!(
        outcome.passed,
        "criterion {index} ({}) failed: {}",
        outcome.name, outcome.detail
    );
}

#[test]
fn criterion_01_degree_one_invariant() {
    check(1);
}

#[test]
fn criterion_02_equivariant_warm_ups() {
    check(2);
}

#[test]
fn criterion_03_cotangent_integrals_vs_string_oracle() {
    check(3);
}

#[test]
fn criterion_04_recursion_rebuilds_fixed_point_series() {
    check(4);
}

#[test]
fn criterion_05_residue_transport() {
    check(5);
}

#[test]
fn criterion_06_pole_reassembly() {
    check(6);
}

#[test]
fn criterion_07_localization_cross_check() {
    check(7);
}

#[test]
fn criterion_08_graph_census_and_weight_independence() {
    check(8);
}

#[test]
fn criterion_09_narrow_theory_pipeline() {
    check(9);
}

#[test]
fn criterion_10_spin_dimension_bookkeeping() {
    check(10);
}
