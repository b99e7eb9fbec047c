//! End-to-end tests against the compiled `crt` binary: verb behavior,
//! exit-code contract, and format round-trips.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn crt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn crt_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_crt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn gen(family: &str, extra: &[&str]) -> String {
    let mut args = vec!["gen", "--family", family];
    args.extend_from_slice(extra);
    let out = crt(&args);
    assert!(out.status.success());
    stdout(&out)
}

#[test]
fn check_accepts_chordal_and_rejects_cycles() {
    let out = crt_stdin(&["check", "-"], "1 2\n2 3\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "chordal");

    let out = crt_stdin(&["check", "-"], "1 2\n2 3\n3 4\n4 1\n");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "not chordal");
}

#[test]
fn usage_errors_exit_two() {
    let out = crt(&["definitely-not-a-verb"]);
    assert_eq!(out.status.code(), Some(2));
    let out = crt_stdin(&["cliques", "-"], "not a graph line\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cliques_of_the_counterexample_graph() {
    let fig2 = gen("fig2", &[]);
    let out = crt_stdin(&["cliques", "-"], &fig2);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "{1,2,3}",
            "{2,3,4,5,8,9}",
            "{2,3,4,6,8,9}",
            "{2,3,5,7,8,9}"
        ]
    );
}

#[test]
fn clique_graph_dot_styles_follow_separating_flags() {
    let fig2 = gen("fig2", &[]);
    let out = crt_stdin(&["cg", "-", "--format", "dot"], &fig2);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert_eq!(dot.matches("style=solid").count(), 5);
    assert_eq!(dot.matches("style=dashed").count(), 1);

    let out = crt_stdin(&["crg", "-", "--format", "dot"], &fig2);
    let dot = stdout(&out);
    assert_eq!(dot.matches("style=solid").count(), 5);
    assert_eq!(dot.matches("style=dashed").count(), 0);
}

#[test]
fn tree_reports_the_optimal_weight() {
    let fig2 = gen("fig2", &[]);
    let out = crt_stdin(&["tree", "-"], &fig2);
    assert!(out.status.success());
    assert!(stdout(&out).contains("total weight 12"));

    let out = crt_stdin(&["tree", "-", "--format", "json"], &fig2);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["total_weight"], 12);
    assert_eq!(parsed["tree_edges"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_passes_on_the_counterexample_graph() {
    let fig2 = gen("fig2", &[]);
    let out = crt_stdin(&["verify", "-", "--suite", "all"], &fig2);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["pass"], true);
    assert!(report["checks"].as_array().unwrap().len() >= 8);
}

#[test]
fn verify_rejects_non_chordal_input() {
    let out = crt_stdin(&["verify", "-", "--suite", "theorem2"], "1 2\n2 3\n3 4\n4 1\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_output_is_deterministic_across_formats() {
    let json_a = gen("wheel_host", &["--n", "5", "--format", "json"]);
    let json_b = gen("wheel_host", &["--n", "5", "--format", "json"]);
    assert_eq!(json_a, json_b);
    // The edge-list and JSON emissions describe the same graph: their
    // clique graphs agree byte for byte.
    let edgelist = gen("wheel_host", &["--n", "5"]);
    let via_json = crt_stdin(&["cg", "-"], &json_a);
    let via_edges = crt_stdin(&["cg", "-"], &edgelist);
    assert_eq!(stdout(&via_json), stdout(&via_edges));
}

#[test]
fn gen_exhaustive_emits_every_class() {
    let out = crt(&["gen", "--family", "exhaustive_chordal", "--n", "4", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn search_finds_a_six_cycle_witness() {
    let out = crt(&["search", "--k", "6", "--attempts", "5000", "--seed", "1"]);
    assert!(out.status.success());
    let witness = stdout(&out);
    let check = crt_stdin(&["check", "-"], &witness);
    assert!(check.status.success());

    let none = crt(&["search", "--k", "5", "--attempts", "300", "--seed", "1"]);
    assert_eq!(none.status.code(), Some(1));
}

#[test]
fn iso_verb_agrees_with_relabeling() {
    let a = "0 1\n1 2\n0 2\n";
    let b = "10 20\n20 30\n10 30\n";
    let dir = std::env::temp_dir();
    let pa = dir.join("crt_iso_a.txt");
    let pb = dir.join("crt_iso_b.txt");
    std::fs::write(&pa, a).unwrap();
    std::fs::write(&pb, b).unwrap();
    let out = crt(&["iso", pa.to_str().unwrap(), pb.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "isomorphic");

    std::fs::write(&pb, "10 20\n20 30\n").unwrap();
    let out = crt(&["iso", pa.to_str().unwrap(), pb.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_env_var_caps_enumeration() {
    let fig2 = gen("fig2", &[]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_crt"))
        .args(["verify", "-", "--suite", "theorem2"])
        .env("CRT_BUDGET", "4")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(fig2.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    // The counterexample graph has 16 spanning trees, over the budget.
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn search_is_deterministic_across_job_counts() {
    let solo = crt(&["search", "--k", "6", "--attempts", "3000", "--seed", "1"]);
    let multi = crt(&["search", "--k", "6", "--attempts", "3000", "--seed", "1", "--jobs", "3"]);
    assert!(solo.status.success() && multi.status.success());
    assert_eq!(stdout(&solo), stdout(&multi));
}

#[test]
fn vertex_weight_policy_loads_and_rejects_zero_weights() {
    let fig2 = gen("fig2", &[]);
    let dir = std::env::temp_dir();
    let weights = dir.join("crt_weights.txt");
    let lines: String = (1..=9).map(|v| format!("{v} 3\n")).collect();
    std::fs::write(&weights, lines).unwrap();
    let policy = format!("vertex-weights:{}", weights.display());
    let out = crt_stdin(&["tree", "-", "--policy", &policy, "--format", "json"], &fig2);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["total_weight"], 36);

    std::fs::write(&weights, "1 0\n").unwrap();
    let out = crt_stdin(&["tree", "-", "--policy", &policy], &fig2);
    assert_eq!(out.status.code(), Some(1));
}
