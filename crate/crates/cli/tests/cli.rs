//! End-to-end runs of the binary: contract examples, exit codes, determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rtcover"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_triangle(dir: &Path) -> String {
    let path = dir.join("triangle.txt");
    fs::write(&path, "3 3\n0 1 1\n1 2 1\n2 0 1\n").unwrap();
    path.to_str().unwrap().to_string()
}

fn capture_to_file(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    let path = dir.join(name);
    fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn triangle_girth_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_triangle(dir.path());
    let out = run(&["girth-mult", "--input", &input, "--k", "1", "--seed", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("estimate: 3"), "{text}");
    assert!(text.contains("witness: 0 1 2"), "{text}");
}

#[test]
fn hundred_cycle_additive_passes_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let input = capture_to_file(dir.path(), "c100.txt", &["gen", "--family", "cycle", "--n", "100"]);
    let out = run(&["girth-add-det", "--input", &input, "--a", "0.5", "--epsilon", "0.25", "--oracle"]);
    assert!(out.status.success(), "verdicts must pass");
    assert!(stdout(&out).contains("estimate: 100"));
    assert!(stdout(&out).contains("verdict girth soundness: PASS"));
}

#[test]
fn hardness_instances_split_on_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = capture_to_file(dir.path(), "k3.txt", &["gen", "--family", "complete", "--n", "3"]);
    let h3 = capture_to_file(dir.path(), "h3.txt", &["gen", "--hardness", "--input", &k3]);
    let out = run(&["girth-add-det", "--input", &h3, "--a", "0.5"]);
    let est: u64 = stdout(&out).lines().next().unwrap().strip_prefix("estimate: ").unwrap().parse().unwrap();
    assert!(est < 6, "triangle base must stay below 2n, got {est}");

    let c4 = capture_to_file(dir.path(), "c4.txt", &["gen", "--family", "cycle", "--n", "4"]);
    let h4 = capture_to_file(dir.path(), "h4.txt", &["gen", "--hardness", "--input", &c4]);
    let out = run(&["girth-add-det", "--input", &h4, "--a", "0.5"]);
    let est: u64 = stdout(&out).lines().next().unwrap().strip_prefix("estimate: ").unwrap().parse().unwrap();
    assert!(est >= 8 && est % 4 == 0, "triangle-free base must stay at 2n or above, got {est}");
}

#[test]
fn reports_are_byte_identical_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let input = capture_to_file(dir.path(), "c100.txt", &["gen", "--family", "cycle", "--n", "100"]);
    let args = ["girth-add", "--input", &input, "--seed", "9", "--json"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "same seed must reproduce the same report");
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["parameters"]["seed"], 9);
    assert_eq!(report["outputs"]["estimate"], 100);
}

#[test]
fn corrupted_witnesses_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_triangle(dir.path());
    let report_path = capture_to_file(
        dir.path(),
        "report.json",
        &["girth-mult", "--input", &input, "--seed", "7", "--json"],
    );
    let clean = run(&["verify", "--input", &input, "--report", &report_path]);
    assert!(clean.status.success(), "intact reports must verify");

    let mut report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    report["outputs"]["witness"][0] = serde_json::json!(2);
    let bad_path = dir.path().join("bad.json");
    fs::write(&bad_path, serde_json::to_string_pretty(&report).unwrap()).unwrap();
    let bad = run(&["verify", "--input", &input, "--report", bad_path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2), "corrupt witnesses must exit 2");
    assert!(stdout(&bad).contains("verdict witness certification: FAIL"));
}

#[test]
fn verification_suite_passes_on_random_instances() {
    let dir = tempfile::tempdir().unwrap();
    let input = capture_to_file(
        dir.path(),
        "strong.txt",
        &["gen", "--family", "strong", "--n", "24", "--m", "72", "--max-len", "6", "--seed", "5"],
    );
    let out = run(&["verify", "--input", &input, "--k", "2", "--seed", "3"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    for name in ["cover membership", "spanner stretch", "spanner size", "girth soundness", "witness certification"] {
        assert!(text.contains(&format!("verdict {name}: PASS")), "{text}");
    }
}

#[test]
fn components_match_the_direct_computation() {
    let dir = tempfile::tempdir().unwrap();
    let input = capture_to_file(
        dir.path(),
        "digraph.txt",
        &["gen", "--family", "digraph", "--n", "30", "--m", "70", "--seed", "11"],
    );
    let out = run(&["scc", "--input", &input, "--oracle", "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verification"][0]["pass"], true);
    let count = report["outputs"]["component_count"].as_u64().unwrap();
    assert!(count >= 1);
}

#[test]
fn cover_reports_membership_counts() {
    let dir = tempfile::tempdir().unwrap();
    let input = capture_to_file(
        dir.path(),
        "strong.txt",
        &["gen", "--family", "strong", "--n", "20", "--m", "60", "--seed", "2"],
    );
    let out = run(&["cover", "--input", &input, "--k", "2", "--oracle", "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["outputs"]["membership"].as_array().unwrap().len(), 20);
    assert_eq!(report["outputs"]["failure_balls"], 0);
    assert!(report["verification"].as_array().unwrap().iter().all(|v| v["pass"] == true));
}

#[test]
fn spanner_reports_its_edges() {
    let dir = tempfile::tempdir().unwrap();
    let input = capture_to_file(
        dir.path(),
        "strong.txt",
        &["gen", "--family", "strong", "--n", "20", "--m", "60", "--seed", "2"],
    );
    let out = run(&["spanner", "--input", &input, "--oracle", "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let edges = report["outputs"]["spanner_edges"].as_array().unwrap();
    assert_eq!(edges.len() as u64, report["outputs"]["spanner_size"].as_u64().unwrap());
    assert!(edges.iter().all(|e| e.as_u64().unwrap() < 60));
}

#[test]
fn bad_inputs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let missing = run(&["girth-mult", "--input", "/no/such/file.txt"]);
    assert_eq!(missing.status.code(), Some(1));

    let input = write_triangle(dir.path());
    let bad_k = run(&["girth-mult", "--input", &input, "--k", "0.5"]);
    assert_eq!(bad_k.status.code(), Some(1));

    let weighted = dir.path().join("weighted.txt");
    fs::write(&weighted, "2 2\n0 1 3\n1 0 1\n").unwrap();
    let non_unit = run(&["girth-add", "--input", weighted.to_str().unwrap()]);
    assert_eq!(non_unit.status.code(), Some(1));

    let malformed = dir.path().join("malformed.txt");
    fs::write(&malformed, "not a graph\n").unwrap();
    let parse = run(&["scc", "--input", malformed.to_str().unwrap()]);
    assert_eq!(parse.status.code(), Some(1));

    let flag = run(&["girth-mult", "--input", &input, "--bogus"]);
    assert_eq!(flag.status.code(), Some(1));
}

#[test]
fn generated_families_parse_back() {
    for family in ["digraph", "strong", "cycle", "complete"] {
        let out = run(&["gen", "--family", family, "--n", "9", "--m", "20", "--seed", "4"]);
        assert!(out.status.success(), "{family}");
        let g = rtcover::graph::Graph::parse(&stdout(&out)).unwrap();
        assert_eq!(g.n, 9, "{family}");
    }
    let unknown = run(&["gen", "--family", "mystery"]);
    assert_eq!(unknown.status.code(), Some(1));
}
