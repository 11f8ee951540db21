//! Binary-level CLI tests: exit codes, JSON schema stability, and
//! determinism across worker counts.

use std::process::{Command, Output};

fn absorb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absorb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_exit_codes() {
    // Completed with a true verdict: exit 0.
    let ok = absorb(&[
        "check", "--ring", "Z/8", "--ideal", "4", "--I", "2", "--n", "1", "--predicate",
        "n-absorbing-I-primary",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_json(&ok)["check"]["holds"], serde_json::json!(true));

    // Completed with a false verdict: still exit 0 without --assert.
    let false_no_assert = absorb(&[
        "check", "--ring", "Z/12", "--ideal", "6", "--I", "2", "--n", "1", "--predicate",
        "n-absorbing-I-primary",
    ]);
    assert_eq!(false_no_assert.status.code(), Some(0));

    // --assert on a failing predicate: exit 1, witness (2, 3) in the report.
    let failing = absorb(&[
        "check", "--ring", "Z/12", "--ideal", "6", "--I", "2", "--n", "1", "--predicate",
        "n-absorbing-I-primary", "--assert",
    ]);
    assert_eq!(failing.status.code(), Some(1));
    let json = stdout_json(&failing);
    assert_eq!(json["check"]["holds"], serde_json::json!(false));
    assert_eq!(json["check"]["witness"]["tuple"], serde_json::json!([2, 3]));
    assert_eq!(
        json["check"]["witness"]["tuple_text"],
        serde_json::json!(["2", "3"])
    );
}

#[test]
fn input_errors_exit_2() {
    let bad_spec = absorb(&["ring", "--ring", "Q/4"]);
    assert_eq!(bad_spec.status.code(), Some(2));
    assert!(!bad_spec.stderr.is_empty());

    let bad_predicate = absorb(&[
        "check", "--ring", "Z/8", "--ideal", "2", "--predicate", "bogus",
    ]);
    assert_eq!(bad_predicate.status.code(), Some(2));

    let composite_poly_modulus = absorb(&["ring", "--ring", "Z/4[x]/(x^2)"]);
    assert_eq!(composite_poly_modulus.status.code(), Some(2));

    // CSV is only defined for the sweep table.
    let csv_misuse = absorb(&["ring", "--ring", "Z/8", "--format", "csv"]);
    assert_eq!(csv_misuse.status.code(), Some(2));
}

#[test]
fn cap_overruns_exit_3() {
    let too_costly = absorb(&[
        "check", "--ring", "Z/64", "--ideal", "", "--n", "4", "--predicate", "n-absorbing",
    ]);
    assert_eq!(too_costly.status.code(), Some(3));

    let oversized = absorb(&["ring", "--ring", "Z/100000"]);
    assert_eq!(oversized.status.code(), Some(3));
}

#[test]
fn size_cap_override_via_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_absorb"))
        .args(["ring", "--ring", "Z/5000"])
        .env("ABSORB_SIZE_CAP", "6000")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["ring_info"]["size"], serde_json::json!(5000));
}

#[test]
fn verify_reports_stable_schema() {
    let out = absorb(&["verify", "--theorem", "2.4", "--rings", "Z/8,Z/12", "--n", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    // Empty failure lists are present, not omitted.
    assert_eq!(json["report"]["failures"], serde_json::json!([]));
    assert_eq!(json["report"]["theorem"], serde_json::json!("2.4"));
    assert!(json["report"]["instances"].as_u64().unwrap() > 0);
    assert!(json["reading"].is_object());
    assert_eq!(json["schema_version"], serde_json::json!(1));
}

#[test]
fn sweep_bytes_identical_across_jobs() {
    let mut runs = Vec::new();
    for jobs in ["1", "8"] {
        let out = absorb(&["sweep", "--ring", "Z/12", "--n", "2", "--jobs", jobs]);
        assert_eq!(out.status.code(), Some(0));
        let mut json = stdout_json(&out);
        absorb_core::report::strip_timing(&mut json);
        runs.push(serde_json::to_string_pretty(&json).unwrap());
    }
    assert_eq!(runs[0].as_bytes(), runs[1].as_bytes());
}

#[test]
fn sweep_csv_has_predicate_columns() {
    let out = absorb(&["sweep", "--ring", "Z/12", "--n", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.contains("n-absorbing-I-primary"));
    assert_eq!(lines.count(), 36); // 6 ideals x 6 ideals x n=1
}

#[test]
fn counterexample_search_reports_findings() {
    let out = absorb(&[
        "verify",
        "--theorem",
        "2.12",
        "--rings",
        "Z/12,Z/30",
        "--n",
        "1,2",
        "--drop",
        "P_not_n_absorbing_primary",
    ]);
    assert_eq!(out.status.code(), Some(0)); // findings are not errors
    let json = stdout_json(&out);
    let failures = json["report"]["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    for f in failures {
        assert_eq!(f["revalidated"], serde_json::json!(true));
    }
    assert_eq!(
        json["report"]["dropped_hypothesis"],
        serde_json::json!("P_not_n_absorbing_primary")
    );

    let unknown = absorb(&[
        "verify", "--theorem", "2.12", "--rings", "Z/8", "--drop", "bogus",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
}
