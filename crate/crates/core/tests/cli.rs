use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metric-lines"))
        .args(args)
        .env_remove("METRIC_LINES_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn single_vertex_is_rejected() {
    let o = run(&["lines", "--graph6", "@"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("need ≥ 2 vertices"), "{}", stderr(&o));
}

#[test]
fn disconnected_lines_exit_one() {
    let o = run(&["lines", "--graph6", "C?"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("disconnected"));
}

#[test]
fn lines_text_and_json() {
    let o = run(&["lines", "--family", "K122"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count=4, universal=true"));

    let o = run(&["lines", "--family", "K2222", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["schema"], "metric-lines/1");
    assert_eq!(v["count"], 7);
    assert_eq!(v["lines"].as_array().unwrap().len(), 7);
}

#[test]
fn edge_list_input() {
    let o = run(&["lines", "--graph6", "4; 0 1; 1 2; 2 3; 3 0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count=1, universal=true"), "{}", stdout(&o));
}

#[test]
fn bad_graph6_exits_two() {
    let o = run(&["lines", "--graph6", "A!"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["lines"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_predicates() {
    let o = run(&["check", "--family", "C4", "--pred", "lc"]);
    assert_eq!(stdout(&o).trim(), "lc=false");
    let o = run(&["check", "--family", "K222", "--pred", "lc,chordal"]);
    assert_eq!(stdout(&o).trim(), "lc=true chordal=false");
    let o = run(&["check", "--family", "P4", "--pred", "bridges,diameter"]);
    assert_eq!(stdout(&o).trim(), "bridges=3 diameter=3");
    let o = run(&["check", "--family", "K222", "--pred", "planarity"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn multipartite_parts() {
    let o = run(&["check", "--family", "multipartite", "--parts", "2,2,2,2", "--pred", "lc"]);
    assert_eq!(stdout(&o).trim(), "lc=true");
    let o = run(&["check", "--family", "multipartite", "--pred", "lc"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_main_theorem_small() {
    let o = run(&["verify", "--suite", "main-theorem", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exceptions: K_{1,2,2} (expected)"), "{}", stdout(&o));
}

#[test]
fn verify_families_and_class() {
    assert_eq!(run(&["verify", "--suite", "families"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "theorem-class"]).status.code(), Some(0));
}

#[test]
fn verify_claims_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports.jsonl");
    let o = run(&["verify", "--suite", "claims", "--n", "6", "--jobs", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(text.lines().count(), 112);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["properties"].as_array().unwrap().len(), 20);
}

#[test]
fn verify_random_stream() {
    let o = run(&["verify", "--suite", "diam3", "--random", "--n", "8", "--count", "10", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["verify", "--suite", "claims", "--random", "--n", "8", "--p", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_without_stream_is_usage_error() {
    assert_eq!(run(&["verify", "--suite", "claims"]).status.code(), Some(2));
}

#[test]
fn enumerate_records() {
    let o = run(&["enumerate", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = run(&["enumerate", "--n", "1"]);
    assert_eq!(stdout(&o).trim(), "@");
    let o = run(&["enumerate", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n ≤ 7"));
}

#[test]
fn generate_family_and_samples() {
    let o = run(&["generate", "--family", "K122"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = run(&["generate", "--random", "--n", "8", "--p", "0.7", "--seed", "1", "--count", "5"]);
    let golden = include_str!("golden/sample_n8_p07_seed1.g6");
    let want: Vec<&str> = golden.lines().take(5).collect();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), want);
}
