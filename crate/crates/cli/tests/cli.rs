//! End-to-end runs of the `metric-lines` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_metric-lines"));
    c.env_remove("METRIC_LINES_JOBS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn verify_up_to_nine_finds_ten_exceptions() {
    let o = run(&["verify", "--n", "3..9", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "n,graph6,edges,diameter,line_count,universal,family,violation");
    let families: Vec<&str> = lines.map(|l| l.split(',').nth(6).unwrap()).collect();
    let mut sorted = families.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, ["K12", "K122", "K122p", "K122pp", "K22", "K23", "K6p", "K8p", "M6", "M8"]);
}

#[test]
fn verify_seven_is_empty() {
    let o = run(&["verify", "--n", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 with fewer lines than vertices"));
    assert!(stdout(&o).contains("total exceptions: 0"));
}

#[test]
fn out_of_range_orders_are_usage_errors() {
    assert_eq!(code(&run(&["verify", "--n", "11"])), 2);
    assert_eq!(code(&run(&["verify", "--n", "2..5"])), 2);
    assert_eq!(code(&run(&["claims", "--n", "9"])), 2);
    assert_eq!(code(&run(&["verify", "--n", "banana"])), 2);
    assert_eq!(code(&run(&["profile", "--n-max", "11"])), 2);
}

#[test]
fn lines_of_named_graphs() {
    let o = run(&["lines", "--family", "K23"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("lines: 4\n") && out.contains("universal: yes\n"), "{out}");
    assert!(stdout(&run(&["lines", "--family", "M8"])).contains("lines: 7\n"));
    let k12 = stdout(&run(&["lines", "--family", "K12"]));
    assert!(k12.contains("lines: 1\n") && k12.contains("universal: yes\n"));
    assert!(k12.ends_with("0 1 2\n"));
}

#[test]
fn lines_from_graph6_and_edge_list() {
    let petersen = stdout(&run(&["lines", "IheA@GUAo"]));
    assert!(petersen.contains("n: 10\ndiameter: 2\n"), "{petersen}");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = run(&["lines", "--edges", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("lines: 1\nuniversal: yes\n"));
}

#[test]
fn lines_rejects_bad_input() {
    assert_eq!(code(&run(&["lines", "not-graph6!"])), 2);
    // Two isolated vertices.
    assert_eq!(code(&run(&["lines", "A?"])), 2);
    assert_eq!(code(&run(&["lines", "--edges", "/nonexistent/file"])), 2);
    assert_eq!(code(&run(&["lines"])), 2);
}

#[test]
fn family_list_and_emit() {
    let o = run(&["family", "--list"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 14, "header plus 13 rows");
    assert!(out.contains("K23\t5\t6\t4\t"));
    assert!(out.contains("M8hat\t8\t12\t7\t"));
    let k22 = run(&["family", "--emit", "K22"]);
    assert_eq!(code(&k22), 0);
    assert_eq!(stdout(&k22), "Cl\n");
    assert_eq!(code(&run(&["family", "--emit", "NOPE"])), 2);
}

#[test]
fn claims_and_profile() {
    let o = run(&["claims", "--n", "3..6"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.matches(" pass ").count(), 16, "{out}");
    let p = run(&["profile", "--n-max", "6"]);
    assert_eq!(code(&p), 0);
    let csv = stdout(&p);
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.starts_with("n,diameter2_graphs,min_lines,argmin_graph6\n3,1,1,"));
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&run(&["enumerate", "--n", "4", "--count"])), "6\n");
    assert_eq!(stdout(&run(&["enumerate", "--n", "4", "--diameter", "2", "--count"])), "4\n");
    assert_eq!(stdout(&run(&["enumerate", "--n", "5"])).lines().count(), 21);
}

#[test]
fn jobs_never_change_output() {
    let a = run(&["verify", "--n", "3..8", "--format", "json", "--dump-lines", "--jobs", "1"]);
    let b = run(&["verify", "--n", "3..8", "--format", "json", "--dump-lines", "--jobs", "4"]);
    let c = bin()
        .args(["verify", "--n", "3..8", "--format", "json", "--dump-lines"])
        .env("METRIC_LINES_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(stdout(&a).contains("\"lines\""));
}

#[test]
fn output_file_and_stdin_source() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let o = run(&["verify", "--n", "5", "--format", "csv", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let builtin = std::fs::read_to_string(&out).unwrap();
    assert_eq!(builtin.lines().count(), 5);

    // Feed the enumerator's own output back through stdin, shuffled
    // labelings included: the report must not change.
    let graphs = stdout(&run(&["enumerate", "--n", "5"]));
    let mut child = bin()
        .args(["verify", "--n", "5", "--format", "csv", "--source", "stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let extra = "DQc\nCl\n"; // another five-vertex labeling and an off-order graph
    child.stdin.take().unwrap().write_all(format!("{graphs}{extra}").as_bytes()).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert_eq!(code(&piped), 0);
    assert_eq!(stdout(&piped), builtin);

    let file = dir.path().join("graphs.g6");
    std::fs::write(&file, &graphs).unwrap();
    let from_file = run(&["verify", "--n", "5", "--format", "csv", "--source", file.to_str().unwrap()]);
    assert_eq!(stdout(&from_file), builtin);
}

#[test]
fn bad_stream_reports_io_error() {
    let mut child = bin()
        .args(["verify", "--n", "4", "--source", "stdin"])
        .stdin(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Cl\n???garbage\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn diameter_three_survey_is_not_a_violation() {
    // Unclassified diameter-3 exceptions are reported but do not count as
    // violations, so the run exits 0.
    assert_eq!(code(&run(&["verify", "--n", "6", "--diameter", "3"])), 0);
}
