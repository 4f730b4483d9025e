//! End-to-end tests of the command-line interface: JSON schemas, pipe
//! composition, and exit codes.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin_text: &str) -> (Value, String, i32) {
    let (stdout, stderr, code) = run_raw(args, stdin_text);
    let value = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap_or(Value::Null)
    };
    (value, stderr, code)
}

fn run_raw(args: &[&str], stdin_text: &str) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monoidalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(stdin_text.as_bytes())
        .expect("stdin accepts input");
    let output = child.wait_with_output().expect("binary finishes");
    (
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
        output.status.code().expect("process exits normally"),
    )
}

fn ints(value: &Value) -> Vec<i64> {
    value
        .as_array()
        .expect("field is an array")
        .iter()
        .map(|v| v.as_i64().expect("entry is an integer"))
        .collect()
}

#[test]
fn family_pipes_into_compare() {
    let (family, _, code) = run(&["family", "rm", "--m", "1"], "");
    assert_eq!(code, 0);
    assert_eq!(family["dim"], 2);
    assert_eq!(family["family"], "rm");

    let (report, _, code) = run(&["compare"], &family.to_string());
    assert_eq!(code, 0);
    assert_eq!(ints(&report["h"]), vec![1, 2, 2]);
    assert_eq!(ints(&report["h_normalization"]), vec![1, 4]);
    assert_eq!(report["gap"], -1);
    assert_eq!(report["s2"], "consistent");
    assert_eq!(report["verified_degree"], 8);
}

#[test]
fn chain_compare_reproduces_reference_numbers() {
    let (family, _, code) = run(&["family", "gk", "--k", "2"], "");
    assert_eq!(code, 0);
    assert_eq!(family["dim"], 10);

    let (report, _, code) = run(
        &["compare", "--degree-bound", "12", "--margin", "8"],
        &family.to_string(),
    );
    assert_eq!(code, 0);
    assert_eq!(ints(&report["h"]), vec![1, 4, 9, 12, 8]);
    assert_eq!(ints(&report["h_normalization"]), vec![1, 4, 9, 13, 6, 1]);
    assert_eq!(report["gap"], 1);
    assert_eq!(report["s2"], "violated");
    assert_eq!(report["depth_estimate"], 9);
}

#[test]
fn hilb_reads_generators_and_reports_counts() {
    let (report, _, code) = run(&["hilb"], r#"{"generators": [[0,2],[1,1],[2,0]]}"#);
    assert_eq!(code, 0);
    assert_eq!(report["dim"], 2);
    assert_eq!(report["verified_degree"], 8);
    assert_eq!(
        ints(&report["counts"]),
        vec![1, 3, 5, 7, 9, 11, 13, 15, 17]
    );
    assert_eq!(ints(&report["h"]), vec![1, 1]);
}

#[test]
fn reports_round_trip_as_inputs() {
    let (family, _, _) = run(&["family", "rm", "--m", "1"], "");
    let (compare, _, _) = run(&["compare"], &family.to_string());
    let (again, _, code) = run(&["hilb"], &compare.to_string());
    assert_eq!(code, 0);
    assert_eq!(again["dim"], 2);
    assert_eq!(again["monoid"], compare["monoid"]);

    let monoid_block = compare["monoid"].to_string();
    let (direct, _, code) = run(&["hilb"], &monoid_block);
    assert_eq!(code, 0);
    assert_eq!(direct["dim"], 2);
}

#[test]
fn edge_ring_reports_triangle() {
    let (report, _, code) = run(
        &["edge-ring"],
        r#"{"vertices": 3, "edges": [[0,1],[1,2],[2,0]]}"#,
    );
    assert_eq!(code, 0);
    assert_eq!(report["dim"], 3);
    assert_eq!(report["normal"], true);
    assert_eq!(report["odd_cycle_count"], 1);
    assert_eq!(report["exceptional_pairs"].as_array().unwrap().len(), 0);
}

#[test]
fn edge_ring_output_pipes_into_hilb() {
    let (ring, _, _) = run(
        &["edge-ring"],
        r#"{"vertices": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}"#,
    );
    let (report, _, code) = run(&["hilb", "--degree-bound", "6"], &ring.to_string());
    assert_eq!(code, 0);
    assert_eq!(report["dim"], 3);
    assert_eq!(ints(&report["counts"]), vec![1, 4, 9, 16, 25, 36, 49]);
}

#[test]
fn normalize_reports_basis() {
    let (family, _, _) = run(&["family", "rm", "--m", "1"], "");
    let (report, _, code) = run(&["normalize"], &family.to_string());
    assert_eq!(code, 0);
    assert_eq!(report["normal"], false);
    assert_eq!(report["hilbert_basis"].as_array().unwrap().len(), 6);
    assert_eq!(report["verified_degree"], 2);
}

#[test]
fn holes_reports_single_family_for_small_chain() {
    let (family, _, _) = run(&["family", "gk", "--k", "1"], "");
    let (report, _, code) = run(
        &["holes", "--degree-bound", "10", "--margin", "6"],
        &family.to_string(),
    );
    assert_eq!(code, 0);
    assert_eq!(ints(&report["hole_counts"]), vec![0, 0, 0, 1, 7]);
    let families = report["families"].as_array().unwrap();
    assert_eq!(families.len(), 1);
    assert_eq!(families[0]["face_dim"], 7);
    assert_eq!(families[0]["base_degree"], 3);
    assert_eq!(report["s2"], "consistent");
    assert_eq!(report["depth_estimate"], 8);
    assert_eq!(report["uncovered"].as_array().unwrap().len(), 0);
}

#[test]
fn join_counts_are_convolutions() {
    let plane = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(plane.path(), r#"{"generators": [[0,1],[1,0]]}"#).unwrap();
    let (family, _, _) = run(&["family", "rm", "--m", "0"], "");
    let (report, _, code) = run(
        &[
            "join",
            "--with",
            plane.path().to_str().unwrap(),
            "--degree-bound",
            "4",
        ],
        &family.to_string(),
    );
    assert_eq!(code, 0);
    assert_eq!(report["dim"], 4);
    assert_eq!(report["convolution_matches"], true);
    assert_eq!(ints(&report["counts"]), vec![1, 6, 18, 40, 75]);
}

#[test]
fn invalid_json_exits_two() {
    let (_, stderr, code) = run_raw(&["hilb"], "not json");
    assert_eq!(code, 2);
    assert!(stderr.contains("invalid JSON"));
}

#[test]
fn incompatible_generators_exit_two() {
    let (_, stderr, code) = run_raw(&["hilb"], r#"{"generators": [[2,0],[3,0]]}"#);
    assert_eq!(code, 2);
    assert!(stderr.contains("grading"));
}

#[test]
fn exhausted_point_budget_exits_three_with_partial_report() {
    let (stdout, stderr, code) = run_raw(
        &["hilb", "--slice-cap", "2"],
        r#"{"generators": [[0,1],[1,0]]}"#,
    );
    assert_eq!(code, 3);
    assert!(stderr.contains("budget"));
    let partial: Value = serde_json::from_str(&stdout).expect("partial report is JSON");
    assert_eq!(partial["verified_degree"], 1);
    assert_eq!(ints(&partial["counts"]), vec![1, 2]);
}

#[test]
fn short_degree_bound_exits_three_with_tail() {
    let (stdout, _, code) = run_raw(
        &["hilb", "--degree-bound", "3"],
        r#"{"generators": [[0,2],[1,1],[2,0]]}"#,
    );
    assert_eq!(code, 3);
    let partial: Value = serde_json::from_str(&stdout).expect("partial report is JSON");
    assert_eq!(partial["verified_degree"], 3);
    assert!(partial["trailing_differences"].is_array());
}

#[test]
fn pretty_compare_renders_series() {
    let (family, _, _) = run(&["family", "rm", "--m", "1"], "");
    let (stdout, _, code) = run_raw(&["compare", "--pretty"], &family.to_string());
    assert_eq!(code, 0);
    assert!(stdout.contains("(1 + 2t + 2t^2) / (1 - t)^2"));
    assert!(stdout.contains("(1 + 4t) / (1 - t)^2"));
    assert!(stdout.contains("h(1)    = 5 and 5 (equal)"));
}

#[test]
fn check_subcommand_is_wired() {
    let (stdout, _, code) = run_raw(&["check", "--help"], "");
    assert_eq!(code, 0);
    assert!(stdout.contains("reproduction battery"));
}
