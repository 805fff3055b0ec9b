use std::process::{Command, Output};

use crefl::catalog::{catalog_json, CatalogEntryJson};
use crefl::steinberg::{CounterexampleReport, SweepReport, TableReport};

fn crefl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crefl")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn info_prints_the_group() {
    let out = crefl(&["info", "[G(6,3,2)]_2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("G(6,3,2) of order 24"));
    assert!(text.contains("steinberg     no"));
}

#[test]
fn unknown_group_is_a_usage_error() {
    let out = crefl(&["info", "[G(9,9,9)]_1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown group"));
    assert_eq!(crefl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(crefl(&["check", "[G(4,1,2)]_1", "--bound", "x"]).status.code(), Some(2));
}

#[test]
fn counterexample_passes_for_negative_rows() {
    let out = crefl(&["counterexample", "[G(6,3,2)]_2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("regular fixed point (1/2, -1 + 1/2*x)"));
    let out = crefl(&["--json", "counterexample", "G(3,3,3):1"]);
    let report: CounterexampleReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.orbits_distinct, Some(true));
    assert_eq!(crefl(&["counterexample", "[G(4,1,2)]_1"]).status.code(), Some(1));
}

#[test]
fn check_reports_round_trip_and_repeat() {
    let args = ["check", "[G(4,2,2)]_3", "-B", "1", "--json"];
    let a: SweepReport = serde_json::from_str(&stdout(&crefl(&args))).unwrap();
    let b: SweepReport = serde_json::from_str(&stdout(&crefl(&args))).unwrap();
    assert!(a.same_result(&b));
    assert_eq!(a.violation_count, 0);
    assert_eq!(a.examined, 1295);
    let sampled = crefl(&["check", "[G(3,1,2)]_2", "--budget", "500", "--jobs", "1"]);
    assert_eq!(sampled.status.code(), Some(0));
    assert!(stdout(&sampled).contains("500 of 1458 elements (sampled)"));
}

#[test]
fn reflections_list_families_and_window() {
    let out = crefl(&["reflections", "[G(4,1,1)]_1", "-R", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("x1 = c, λ = -1"));
    assert_eq!(text.lines().filter(|l| l.starts_with("  ")).count(), 25);
    let json: serde_json::Value = serde_json::from_str(&stdout(&crefl(&["--json", "reflections", "[G(6,2,2)]_2"]))).unwrap();
    assert_eq!(json["families"].as_array().unwrap().len(), 8);
    assert!(json["window"].is_null());
}

#[test]
fn plot_writes_svg() {
    let path = std::env::temp_dir().join(format!("crefl-plot-{}.svg", std::process::id()));
    let out = crefl(&["plot", "[G(6,1,1)]_1", "-R", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(r#"viewBox="-250 -250 500 500""#));
    assert_eq!(crefl(&["plot", "[G(4,1,2)]_1"]).status.code(), Some(1));
}

#[test]
fn catalog_matches_the_library() {
    let out = crefl(&["catalog"]);
    let entries: Vec<CatalogEntryJson> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(entries, catalog_json());
}

#[test]
fn quick_table_has_no_mismatches() {
    let out = crefl(&["--json", "table", "--quick", "--budget", "2000"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: TableReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.mismatches, 0);
    assert_eq!(report.rows.len(), 34);
}
