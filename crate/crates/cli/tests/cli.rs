use std::process::{Command, Output};

use poncelet_core::classify::ClassificationReport;
use poncelet_core::geometry::TraceResult;
use poncelet_core::painleve::PVISolutionPoint;

fn poncelet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poncelet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn cayley_three_is_the_unit_circle() {
    let out = poncelet(&["cayley", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x^2 + y^2 - 1\n");
}

#[test]
fn cayley_json_round_trips() {
    let out = poncelet(&["cayley", "--n", "5", "--p", "0.5", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["p"], "1/2");
    assert_eq!(v["n"], 5);
    assert_eq!(v["divisors_removed"], serde_json::json!([]));
    let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn classify_four_gon_at_two_zero() {
    let out = poncelet(&["classify", "--n", "4", "--center", "2,0"]);
    assert!(out.status.success());
    let report: ClassificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.count, 1);
    assert_eq!(report.roots.len(), 1);
    assert!((report.roots[0].p + 1.5).abs() < 1e-12);
    let printed = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(printed.trim(), stdout(&out).trim());
}

#[test]
fn isoperiodic_centres() {
    let out = poncelet(&["isoperiodic", "--center", "0,0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 4);
    let out = poncelet(&["isoperiodic", "--center", "-3/5,4/5"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 3);
    let out = poncelet(&["isoperiodic", "--center", "0,0.5"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["n"].is_null());
}

#[test]
fn trace_closes_for_the_focus_centred_circle() {
    let svg = std::env::temp_dir().join(format!("poncelet-trace-{}.svg", std::process::id()));
    let out = poncelet(&["trace", "--center", "0,0", "--p", "1", "--n", "4", "--svg", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let trace: TraceResult = serde_json::from_slice(&out.stdout).unwrap();
    assert!(trace.closed);
    assert!(trace.closure_residual < 1e-9);
    assert_eq!(trace.period, Some(4));
    let reprinted: TraceResult = serde_json::from_str(&serde_json::to_string(&trace).unwrap()).unwrap();
    assert_eq!(reprinted, trace);
    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.starts_with("<svg"));
    let _ = std::fs::remove_file(svg);
}

#[test]
fn trace_with_complex_start() {
    let out = poncelet(&["trace", "--center", "0,0", "--p", "1", "--n", "4", "--start", "0.3,0.2"]);
    assert!(out.status.success());
    let trace: TraceResult = serde_json::from_slice(&out.stdout).unwrap();
    assert!(trace.closed);
}

#[test]
fn locus_csv_points_satisfy_the_curve() {
    let out = poncelet(&["locus", "--n", "3", "--p", "1", "--grid", "64"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y"));
    let mut count = 0;
    for line in lines {
        let (x, y) = line.split_once(',').unwrap();
        let (x, y): (f64, f64) = (x.parse().unwrap(), y.parse().unwrap());
        assert!((x.hypot(y) - 1.0).abs() < 0.02);
        count += 1;
    }
    assert!(count > 20);
}

#[test]
fn locus_svg() {
    let out = poncelet(&["locus", "--n", "5", "--p", "1/2", "--grid", "32", "--format", "svg"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("viewBox=\"-3 -3 6 6\""));
}

#[test]
fn painleve_csv() {
    let out = poncelet(&["painleve", "--family", "3", "--p", "1", "2", "5", "-5", "-6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "p,x,y0,y,res0,res1,rel");
    assert_eq!(rows.len(), 6);
    for row in &rows[1..] {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 7);
        let res0: f64 = cols[4].parse().unwrap();
        let res1: f64 = cols[5].parse().unwrap();
        assert!(res0 < 1e-7 && res1 < 1e-7);
    }
}

#[test]
fn painleve_json_round_trips() {
    let out = poncelet(&["painleve", "--family", "4", "--p", "2.5", "3", "4", "-3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["points"].as_array().unwrap().len(), 4);
    let points: Vec<PVISolutionPoint> = serde_json::from_value(v["points"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&points).unwrap(), v["points"]);
    assert!(points.iter().all(|pt| pt.max_residual() < 1e-7));
}

#[test]
fn painleve_at_a_branch_point_fails() {
    let out = poncelet(&["painleve", "--family", "4", "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_identities_reports_the_printed_o_factor() {
    let out = poncelet(&["verify-identities"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL")).count(), 1);
    assert!(text.contains("FAIL O(Q7) factorisation:"));
    assert!(text.contains("PASS O(Q7) factorisation with 12x^2"));
}

#[test]
fn flag_errors_exit_with_two() {
    for args in [
        vec!["cayley"],
        vec!["cayley", "--n", "13"],
        vec!["classify", "--n", "4", "--center", "2"],
        vec!["trace", "--center", "0,0", "--p", "0", "--n", "4"],
        vec!["locus", "--n", "5", "--p", "x"],
        vec!["painleve", "--family", "5", "--p", "1"],
        vec!["no-such-command"],
    ] {
        let out = poncelet(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}
