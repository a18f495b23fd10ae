//! End-to-end tests of the `regmat` binary: JSON content, byte
//! stability, and the exit-code contract.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn regmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regmat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn odd_circuit_on_the_triangle_matrix() {
    let triangle = fixture("triangle.txt");
    let out = regmat(&["odd-circuit", "--input", triangle.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["found"], true);
    assert_eq!(json["circuit"], serde_json::json!(["0", "1", "2"]));
}

#[test]
fn odd_dijoin_is_absent_on_the_odd_one_direction() {
    let host = fixture("one_direction_2_3.txt");
    let out = regmat(&[
        "odd-dijoin",
        "--format",
        "digraph",
        "--input",
        host.to_str().unwrap(),
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["found"], false);
    assert_eq!(json["join"], serde_json::Value::Null);
}

#[test]
fn farkas_on_an_acyclic_edge_reports_the_cocircuit_branch() {
    let path = fixture("path.txt");
    let out = regmat(&[
        "farkas",
        "e0",
        "--format",
        "digraph",
        "--input",
        path.to_str().unwrap(),
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["branch"], "directed-cocircuit");
    assert_eq!(json["method"], "exact-lp");
}

#[test]
fn basis_of_the_triangle_lists_one_member_with_its_cover() {
    let triangle = fixture("triangle.txt");
    let out = regmat(&["basis", "--input", triangle.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["members"], serde_json::json!([["0", "1", "2"]]));
    assert_eq!(json["cover"], serde_json::json!(["2"]));
}

#[test]
fn non_even_and_even_circuit_agree_on_the_triangle() {
    let triangle = fixture("triangle.txt");
    let non_even = stdout_json(&regmat(&["non-even", "--input", triangle.to_str().unwrap()]));
    assert_eq!(non_even["non_even"], true);
    // The brute-force solver picks the least-pivot solution: element 0
    // alone hits the only directed circuit {0,1,2} once.
    assert_eq!(non_even["cover"], serde_json::json!(["0"]));
    let even = stdout_json(&regmat(&[
        "even-circuit",
        "--input",
        triangle.to_str().unwrap(),
    ]));
    assert_eq!(even["found"], false);
}

#[test]
fn d_family_reports_clause_and_join() {
    let json = stdout_json(&regmat(&["d-family", "1", "3", "1"]));
    assert_eq!(json["clause"], "middle-large");
    assert_eq!(json["has_odd_dijoin"], true);
    assert!(json["join"].is_array());
    let absent = stdout_json(&regmat(&["d-family", "2", "3", "2"]));
    assert_eq!(absent["has_odd_dijoin"], false);
}

#[test]
fn minimal_obstruction_recognises_the_odd_one_direction() {
    let host = fixture("one_direction_2_3.txt");
    let out = regmat(&[
        "minimal-obstruction",
        "--format",
        "digraph",
        "--input",
        host.to_str().unwrap(),
    ]);
    assert_eq!(stdout_json(&out)["minimal_obstruction"], true);
}

#[test]
fn output_is_byte_stable() {
    let triangle = fixture("triangle.txt");
    let a = regmat(&["tc", "--input", triangle.to_str().unwrap()]);
    let b = regmat(&["tc", "--input", triangle.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes_separate_parse_bound_and_success() {
    let missing = regmat(&["tc", "--input", "/nonexistent-regmat-input.txt"]);
    assert_eq!(missing.status.code(), Some(1));

    let unknown_edge = regmat(&[
        "farkas",
        "zz",
        "--format",
        "digraph",
        "--input",
        fixture("path.txt").to_str().unwrap(),
    ]);
    assert_eq!(unknown_edge.status.code(), Some(1));

    // 15 vertices exceed the default vertex bound of 14.
    let mut text = String::from("digraph\n");
    for v in 0..15 {
        text += &format!("v{v} v{}\n", (v + 1) % 15);
    }
    let big = std::env::temp_dir().join("regmat-test-bigcycle.txt");
    std::fs::write(&big, text).unwrap();
    let bound = regmat(&[
        "odd-dijoin",
        "--format",
        "digraph",
        "--input",
        big.to_str().unwrap(),
    ]);
    assert_eq!(bound.status.code(), Some(2));

    let raised = regmat(&[
        "odd-dijoin",
        "--format",
        "digraph",
        "--bound",
        "15",
        "--input",
        big.to_str().unwrap(),
    ]);
    assert_eq!(raised.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&raised.stderr).contains("may be slow"));
    std::fs::remove_file(&big).ok();
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let triangle = fixture("triangle.txt");
    let target = std::env::temp_dir().join("regmat-test-report.json");
    let out = regmat(&[
        "non-even",
        "--input",
        triangle.to_str().unwrap(),
        "--output",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written["non_even"], true);
    std::fs::remove_file(&target).ok();
}
