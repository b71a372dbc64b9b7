//! End-to-end tests that drive the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lemniscate"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("lemniscate-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn classify_prints_verdict_with_threshold() {
    let out = run(&["classify", "--variant", "scaled", "--n", "4", "--C", "0.2", "--k", "1"]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert!(line.starts_with("BoundedUnique (C*=0.25, margin=-0.0"), "got: {line}");
}

#[test]
fn classify_json_has_fields() {
    let out = run(&["classify", "--variant", "scaled", "--n", "4", "--C", "0.3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "NoBoundedComponent");
    assert_eq!(v["c_star"], 0.25);
    assert!(v["margin"].as_f64().unwrap() > 0.0);
}

#[test]
fn classify_convention_moves_conic_transition() {
    let base = ["classify", "--variant", "scaled", "--n", "2", "--C", "0.7"];
    let out = run(&base);
    assert_eq!(stdout(&out).trim(), "Conic(Ellipse)");
    let mut half = base.to_vec();
    half.extend(["--convention", "half-square"]);
    let out = run(&half);
    assert_eq!(stdout(&out).trim(), "Conic(Hyperbola)");
}

#[test]
fn trace_csv_round_trips_alpha_values() {
    let out = run(&[
        "trace", "--variant", "scaled", "--n", "4", "--C", "0.1", "--k", "1", "--m", "16",
    ]);
    assert!(out.status.success());
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("theta,alpha"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (t, a) = l.split_once(',').unwrap();
            (t.parse().unwrap(), a.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 16);
    // parsed samples satisfy the defining equation to round-off
    for &(theta, alpha) in &rows {
        let f = 0.1 * alpha.powi(4) * (4.0 * theta).cos() - alpha * alpha + 1.0;
        assert!(f.abs() < 1e-9, "f = {f} at theta = {theta}");
    }
}

#[test]
fn trace_writes_svg_artifact() {
    let svg_path = tmp_path("trace.svg");
    let out = run(&[
        "trace", "--variant", "scaled", "--n", "4", "--C", "0.2", "--m", "64", "--out",
        tmp_path("trace.csv").to_str().unwrap(), "--svg", svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("polyline"));
    std::fs::remove_file(svg_path).ok();
    std::fs::remove_file(tmp_path("trace.csv")).ok();
}

#[test]
fn rigidity_matches_reference_value() {
    let out = run(&["rigidity", "--variant", "scaled", "--n", "4", "--C", "0.25", "--k", "1"]);
    assert!(out.status.success());
    let line = stdout(&out);
    let value: f64 = line
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix("rigidity="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((value - 1.63988).abs() < 5e-4, "got {value}");
}

#[test]
fn sweep_csv_marks_unbounded_cells() {
    let out = run(&[
        "sweep", "--variant", "scaled", "--n", "4", "--C-list", "0.1,0.3", "--k-list", "1",
        "--m", "128", "--radial-order", "8",
    ]);
    assert!(out.status.success());
    let csv = stdout(&out);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "C,k,rigidity,abs_err");
    assert_eq!(lines.len(), 3);
    assert!(!lines[1].contains("nan"));
    assert!(lines[2].ends_with("nan,nan"));
}

#[test]
fn oracle_reports_one_bounded_loop_and_dumps_pgm() {
    let pgm_path = tmp_path("grid.pgm");
    let out = run(&[
        "oracle", "--variant", "scaled", "--n", "4", "--C", "0.2", "--resolution", "64",
        "--pgm", pgm_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["bounded_loop_count"], 1);
    assert_eq!(v["origin_component_bounded"], true);
    let pgm = std::fs::read_to_string(&pgm_path).unwrap();
    assert!(pgm.starts_with("P2\n64 64\n255\n"));
    std::fs::remove_file(pgm_path).ok();
}

#[test]
fn reproduce_passes_all_rows() {
    let out = run(&["reproduce", "--section", "3", "--m", "512"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 4);
    assert_eq!(text.matches("FAIL").count(), 0);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "trace", "--variant", "two-term", "--n", "5", "--j", "1", "--C", "0.02", "--k", "1",
        "--m", "64",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    // sweeps run cells in parallel but emit rows in input order
    let sweep_args = [
        "sweep", "--variant", "scaled", "--n", "4", "--C-list", "0.0,0.05,0.1,0.15,0.2",
        "--k-list", "0.5,1.0", "--m", "128", "--radial-order", "8",
    ];
    let first = run(&sweep_args);
    let second = run(&sweep_args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn thread_cap_does_not_change_results() {
    let args = [
        "sweep", "--variant", "scaled", "--n", "4", "--C-list", "0.0,0.1,0.2", "--k-list", "1",
        "--m", "128", "--radial-order", "8",
    ];
    let parallel = run(&args);
    let serial = Command::new(env!("CARGO_BIN_EXE_lemniscate"))
        .args(args)
        .env("LEMNISCATE_THREADS", "1")
        .output()
        .unwrap();
    assert!(serial.status.success());
    assert_eq!(parallel.stdout, serial.stdout);
}

#[test]
fn validation_errors_exit_with_code_1() {
    // missing --n for a scaled family
    let out = run(&["classify", "--variant", "scaled", "--C", "0.2"]);
    assert_eq!(out.status.code(), Some(1));

    // nonpositive k is rejected by the library
    let out = run(&["classify", "--variant", "scaled", "--n", "4", "--C", "0.2", "--k", "-1"]);
    assert_eq!(out.status.code(), Some(1));

    // unknown variant is a usage error
    let out = run(&["classify", "--variant", "nope", "--C", "0.2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn numeric_failures_exit_with_code_2() {
    // valid family, but nothing bounded to trace
    let out = run(&["trace", "--variant", "scaled", "--n", "4", "--C", "0.3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["rigidity", "--variant", "two-term", "--n", "5", "--j", "2", "--C", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}
