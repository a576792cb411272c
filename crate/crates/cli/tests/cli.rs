//! End-to-end checks of the binary: exit codes, output formats, and
//! byte-level determinism of stdout for a fixed configuration.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintic-mirror"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn degree_one_invariant_is_2875_by_default() {
    let out = run(&["gw-invariant", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "{\"degree\":1,\"insertions\":\"1\",\"value_num\":\"2875\",\"value_den\":\"1\"}\n"
    );
}

#[test]
fn divisor_insertions_scale_by_the_degree() {
    let out = run(&["gw-invariant", "--degree", "2", "--insert", "H", "--insert", "H"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"value_num\":\"4876875\",\"value_den\":\"2\""));
}

#[test]
fn dimension_mismatch_is_a_usage_error() {
    let out = run(&["gw-invariant", "--degree", "1", "--insert", "H^3"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout_of(&out);
    assert!(text.starts_with("{\"error\":"), "got: {text}");
}

#[test]
fn degenerate_weights_fail_before_computation() {
    let out = run(&["gw-invariant", "--degree", "1", "--alpha", "1,1,2,3,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).starts_with("{\"error\":"));

    let out = run(&["gw-invariant", "--degree", "1", "--alpha", "0,1,2,3,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_insertions_are_usage_errors() {
    let out = run(&["gw-invariant", "--degree", "1", "--insert", "K^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("unknown insertion factor"));
}

#[test]
fn identical_configurations_give_identical_bytes() {
    for args in [
        vec!["gw-invariant", "--degree", "2", "--seed", "9"],
        vec!["graphs", "--degree", "2", "--marks", "1", "--count-only"],
        vec!["graphs", "--degree", "2"],
        vec!["i-function", "--theory", "fjrw", "--order", "11"],
        vec!["spin-rank", "2,2,2", "--format", "csv"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "stdout differs for {args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn invariants_do_not_depend_on_the_weights() {
    let default = run(&["gw-invariant", "--degree", "1"]);
    let explicit = run(&[
        "gw-invariant",
        "--degree",
        "1",
        "--alpha",
        "5/2,-7,13/3,29,-61/4",
    ]);
    let seeded = run(&["gw-invariant", "--degree", "1", "--seed", "31"]);
    assert_eq!(default.stdout, explicit.stdout);
    assert_eq!(default.stdout, seeded.stdout);
}

#[test]
fn verify_alpha_recomputes_under_fresh_weights() {
    let out = run(&["gw-invariant", "--degree", "1", "--verify-alpha", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"value_num\":\"2875\""));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("verified under 2 fresh weight vectors"), "stderr: {err}");
}

#[test]
fn census_counts_match_known_sizes() {
    for (marks, degree, count) in [(0usize, 1u32, 10usize), (1, 1, 20), (0, 2, 60)] {
        let out = run(&[
            "graphs",
            "--marks",
            &marks.to_string(),
            "--degree",
            &degree.to_string(),
            "--count-only",
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(
            stdout_of(&out),
            format!("{{\"marks\":{marks},\"degree\":{degree},\"count\":{count}}}\n")
        );
    }
}

#[test]
fn csv_format_emits_headers_and_rows() {
    let out = run(&["gw-invariant", "--degree", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "degree,insertions,value_num,value_den\n1,1,2875,1\n"
    );

    let out = run(&["fjrw-invariants", "--max-insertions", "4", "--format", "csv"]);
    assert_eq!(
        stdout_of(&out),
        "n,insertions,value_num,value_den\n3,phi_2^3,1,5\n4,phi_2^4,0,1\n"
    );

    let out = run(&["graphs", "--degree", "1", "--format", "csv"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("vertices,legs,edges,aut_order\n"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn series_output_pins_the_first_coefficients() {
    let out = run(&["i-function", "--theory", "gw", "--order", "1"]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].contains("\"basis\":\"H^0\"") && lines[0].contains("\"z_power\":1"));
    assert!(lines[0].contains("{\"num\":\"120\",\"den\":\"1\"}"));
    assert!(lines[1].contains("{\"num\":\"770\",\"den\":\"1\"}"));
    assert!(lines[3].contains("{\"num\":\"-1150\",\"den\":\"1\"}"));

    let out = run(&["i-function", "--theory", "fjrw", "--order", "6", "--format", "csv"]);
    let text = stdout_of(&out);
    assert!(text.contains("fjrw,0,phi_1,1,q,6,1;0;0;0;0;1/375000;0"));
    assert!(text.contains("fjrw,1,phi_2,0,q,6,0;1;0;0;0;0;2/140625"));
}

#[test]
fn fjrw_invariants_follow_the_residue_pattern() {
    let out = run(&["fjrw-invariants", "--max-insertions", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("{\"n\":3,\"insertions\":\"phi_2^3\",\"value_num\":\"1\",\"value_den\":\"5\"}"));
    assert!(text.contains("{\"n\":4,\"insertions\":\"phi_2^4\",\"value_num\":\"0\",\"value_den\":\"1\"}"));
    assert!(text.contains("{\"n\":8,\"insertions\":\"phi_2^8\",\"value_num\":\"8\",\"value_den\":\"3125\"}"));

    let out = run(&["fjrw-invariants", "--max-insertions", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spin_rank_reports_both_moduli_shapes() {
    let out = run(&["spin-rank", "2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "{\"multiplicities\":\"2,2,2\",\"marks\":3,\"status\":\"nonempty\",\
         \"rounded_degree\":-1,\"obstruction_rank\":0,\"virtual_dim\":0}\n"
    );

    let out = run(&["spin-rank", "2,2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"status\":\"empty\""));

    let out = run(&["spin-rank", "5,2,2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["spin-rank", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fjrw_mirror_check_passes_and_stays_on_stdout() {
    let out = run(&["mirror-check", "--theory", "fjrw", "--q-order", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.contains("\"status\":\"pass\"")));
}

#[test]
fn jobs_flag_validates_and_runs() {
    let out = run(&["gw-invariant", "--degree", "1", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["gw-invariant", "--degree", "1", "--jobs", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
