//! Full-depth verification runs at the orders the suite promises: the
//! recursion, residues, reassembly, localization, and census criteria,
//! each against the default weights plus seeded-style generic specs.

use quintic_mirror::equivariant::AlphaSpec;
use quintic_mirror::exact::Rat;
use quintic_mirror::selfcheck::{run_criterion, SelfcheckConfig};

/// Weight vectors with no small-denominator coincidences: every degree-2
/// midpoint and degree-3 third-point of a pair avoids the other weights,
/// so edge factors through degree 3 stay nonzero.
fn generic_specs() -> Vec<AlphaSpec> {
    vec![
        AlphaSpec::new(vec![
            Rat::frac(5, 2),
            Rat::from_int(-7),
            Rat::frac(13, 3),
            Rat::from_int(29),
            Rat::frac(-61, 4),
        ])
        .unwrap(),
        AlphaSpec::new(vec![
            Rat::from_int(3),
            Rat::frac(-11, 2),
            Rat::from_int(17),
            Rat::frac(-23, 3),
            Rat::from_int(41),
        ])
        .unwrap(),
        AlphaSpec::new(vec![
            Rat::frac(9, 4),
            Rat::from_int(19),
            Rat::frac(-31, 2),
            Rat::frac(53, 3),
            Rat::from_int(-71),
        ])
        .unwrap(),
    ]
}

fn full_config() -> SelfcheckConfig {
    SelfcheckConfig {
        extra_alphas: generic_specs(),
        ..SelfcheckConfig::default()
    }
}

fn assert_criterion(index: usize) {
    let outcome = run_criterion(index, &full_config());
    assert!(
        outcome.passed,
        "criterion {index} ({}) failed: {}",
        outcome.name, outcome.detail
    );
    eprintln!(
        "criterion {index} ({}): {} [{} ms]",
        outcome.name, outcome.detail, outcome.millis
    );
}

#[test]
fn recursion_rebuilds_series_at_full_order() {
    assert_criterion(4);
}

#[test]
fn residue_transport_at_full_order() {
    assert_criterion(5);
}

#[test]
fn pole_reassembly_at_full_order() {
    assert_criterion(6);
}

#[test]
fn localization_cross_check_at_both_orders() {
    assert_criterion(7);
}

#[test]
fn census_and_weight_independence() {
    assert_criterion(8);
}
