//! End-to-end tests against the built binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kk3"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kk3-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout_json(output: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&output.stdout);
    // Graph-emitting commands print the graph6 line first.
    let json_start = text.find('{').unwrap_or_else(|| {
        panic!("no JSON in output: {text}");
    });
    serde_json::from_str(&text[json_start..]).expect("valid JSON on stdout")
}

#[test]
fn search_certifies_and_caches() {
    let cache = tmp("search.jsonl");
    let _ = std::fs::remove_file(&cache);
    let run = || {
        bin()
            .args(["search", "--n", "6", "--t", "2", "--cache"])
            .arg(&cache)
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let doc = stdout_json(&first);
    assert_eq!(doc["min_edges"], 6);
    assert_eq!(doc["certified"], true);
    assert_eq!(doc["cached"], false);

    // Second run hits the cache.
    let second = run();
    assert!(second.status.success());
    let doc = stdout_json(&second);
    assert_eq!(doc["min_edges"], 6);
    assert_eq!(doc["cached"], true);

    // KK_CACHE provides the default path.
    let env_run = bin()
        .args(["search", "--n", "6", "--t", "2"])
        .env("KK_CACHE", &cache)
        .output()
        .unwrap();
    assert!(env_run.status.success());
    assert_eq!(stdout_json(&env_run)["cached"], true);
}

#[test]
fn search_reports_infeasible_with_exit_zero() {
    let cache = tmp("infeasible.jsonl");
    let _ = std::fs::remove_file(&cache);
    let out = bin()
        .args(["search", "--n", "2", "--t", "2", "--cache"])
        .arg(&cache)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["infeasible"], true);
    assert!(doc["min_edges"].is_null());
}

#[test]
fn exhausted_budget_exits_two() {
    let cache = tmp("budget.jsonl");
    let _ = std::fs::remove_file(&cache);
    let out = bin()
        .args([
            "search", "--n", "9", "--t", "2", "--budget", "1", "--force", "--cache",
        ])
        .arg(&cache)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let doc = stdout_json(&out);
    assert_eq!(doc["certified"], false);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let run = |cache: PathBuf| {
        let _ = std::fs::remove_file(&cache);
        bin()
            .args(["search", "--n", "7", "--t", "2", "--seed", "3", "--cache"])
            .arg(&cache)
            .output()
            .unwrap()
            .stdout
    };
    let a = run(tmp("det-a.jsonl"));
    let b = run(tmp("det-b.jsonl"));
    assert_eq!(a, b);
}

#[test]
fn oracle_matches_search() {
    let out = bin()
        .args(["oracle", "--n", "4", "--t", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["min_edges"], 5);
}

#[test]
fn construct_matched_clique_prints_octahedron() {
    let out = bin()
        .args(["construct", "--matched-clique", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("EznW\n"), "got: {text}");
    let doc = stdout_json(&out);
    assert_eq!(doc["triangles_per_vertex"], 4);
    assert_eq!(doc["edges"], 12);
}

#[test]
fn construct_writes_sidecar_with_out() {
    let path = tmp("oct.g6");
    let out = bin()
        .args(["construct", "--matched-clique", "4", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "EznW\n");
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path.with_extension("json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["m"], 4);
}

#[test]
fn shadow_and_bound_commands() {
    // Complete family on 5 points: shadow 10 matches the bound exactly.
    let fam = tmp("colex10.txt");
    let mut text = String::from("3 5\n");
    for s in kk3::shadow::colex_segment(10, 3).members() {
        let labels: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        text.push_str(&labels.join(","));
        text.push('\n');
    }
    std::fs::write(&fam, text).unwrap();
    let out = bin()
        .args(["shadow", "--ell", "2", "--family"])
        .arg(&fam)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["shadow_size"], 10);
    assert!((doc["lovasz_bound"].as_f64().unwrap() - 10.0).abs() < 1e-9);
    assert_eq!(doc["meets_bound"], true);

    let out = bin()
        .args(["bound", "--m", "10", "--k", "3", "--ell", "2"])
        .output()
        .unwrap();
    let doc = stdout_json(&out);
    assert!((doc["bound"].as_f64().unwrap() - 10.0).abs() < 1e-9);
    assert!((doc["x"].as_f64().unwrap() - 5.0).abs() < 1e-9);
}

#[test]
fn transform_and_verify_round_trip() {
    // K4 plus a boundary vertex adjacent to {1, 3}.
    let graph = tmp("k4b.txt");
    std::fs::write(&graph, "5\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 1\n4 3\n").unwrap();
    let out = bin()
        .args(["transform", "--a1", "0,1,2,3", "--a2", "0,1,2,3", "--graph"])
        .arg(&graph)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = stdout_json(&out);
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["input_edges"], doc["output_edges"]);

    // Verify a certified witness: the two-triangle graph.
    let witness = tmp("witness.txt");
    std::fs::write(&witness, "6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n").unwrap();
    let out = bin()
        .args(["verify", "--t", "2", "--graph"])
        .arg(&witness)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let failed: Vec<&serde_json::Value> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert!(failed.is_empty(), "failed checks: {failed:?}");
}

#[test]
fn peel_trace_from_cli() {
    let graph = tmp("peel.txt");
    std::fs::write(&graph, "7\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n6 0\n6 3\n").unwrap();
    let out = bin()
        .args(["peel", "--t", "2", "--graph"])
        .arg(&graph)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = stdout_json(&out);
    assert_eq!(doc["lambda"], 2);
    assert_eq!(doc["xi"], 1);
    assert!(doc["report"].as_str().unwrap().contains("u=6 f=2"));
}

#[test]
fn usage_errors_exit_one() {
    let out = bin()
        .args(["search", "--n", "6", "--t", "x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .args(["construct", "--matched-clique", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .args(["bound", "--m", "10", "--k", "3", "--ell", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_command_reports_constants() {
    let out = bin().args(["bounds", "--t", "99"]).output().unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert!((doc["theta"].as_f64().unwrap() - 9.428725368201447).abs() < 1e-9);
    assert!((doc["c"].as_f64().unwrap() - 6.302943722236935).abs() < 1e-9);
}
