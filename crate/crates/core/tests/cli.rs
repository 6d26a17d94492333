use std::path::Path;
use std::process::{Command, Output};

use hyperconn::hypergraph::Hypergraph;
use serde_json::Value;

fn hyperconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperconn"))
        .args(args)
        .env_remove("HYPERCONN_BUDGET")
        .output()
        .expect("spawn hyperconn")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    let text = stdout(o);
    assert_eq!(text.lines().count(), 1, "expected one json line, got {text:?}");
    serde_json::from_str(&text).unwrap()
}

fn write_hypergraph(dir: &Path, name: &str, h: &Hypergraph) -> String {
    let path = dir.join(name);
    std::fs::write(&path, h.to_text()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_reports_the_first_violation() {
    let o = hyperconn(&["--format", "json", "check", "--theorem", "2.3", "--r", "2", "--k", "2", "--seq", "2,2,2,2,2,2"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["command"], "check");
    let w = &v["result"]["verdict"]["violation"];
    assert_eq!(w["condition_id"], "T23-4");
    assert_eq!(w["j"], 3);
    assert_eq!(w["failed_consequent_bounds"], serde_json::json!([[6, 4]]));

    assert_eq!(code(&hyperconn(&["check", "--theorem", "2.3", "--r", "2", "--k", "2", "--seq", "3,3,3,3"])), 0);
    let o = hyperconn(&["check", "--theorem", "9.9", "--r", "2", "--seq", "1,1"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn check_modes_differ_on_the_four_cycle() {
    let base = ["check", "--theorem", "3.2", "--r", "2", "--seq", "2,2,2,2"];
    assert_eq!(code(&hyperconn(&base)), 1);
    let literal: Vec<&str> = ["--mode", "paper-literal"].iter().chain(base.iter()).copied().collect();
    assert_eq!(code(&hyperconn(&literal)), 0);
}

#[test]
fn check_reads_sequence_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seqs.txt");
    std::fs::write(&path, "# two sequences\n3,3,3,3\n2 2 2 2 2 2\n").unwrap();
    let o = hyperconn(&["--format", "json", "check", "--theorem", "2.2", "--r", "2", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let results = json(&o)["result"]["results"].as_array().unwrap().clone();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["verdict"]["satisfied"], true);
    assert_eq!(results[1]["verdict"]["satisfied"], false);
}

#[test]
fn missing_or_malformed_flags_are_usage_errors() {
    assert_eq!(code(&hyperconn(&["check", "--theorem", "2.3", "--r", "2", "--seq", "1,1"])), 2);
    assert_eq!(code(&hyperconn(&["check", "--theorem", "2.3", "--r", "2", "--k", "2", "--seq", "1,x"])), 2);
    assert_eq!(code(&hyperconn(&["frobnicate"])), 2);
    assert_eq!(code(&hyperconn(&["--help"])), 0);
    assert_eq!(code(&hyperconn(&["--version"])), 0);
}

#[test]
fn oracle_writes_the_two_triangle_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cex.hg");
    let o = hyperconn(&[
        "oracle", "--property", "k-edge", "--r", "2", "--k", "2", "--seq", "2,2,2,2,2,2", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    let h = Hypergraph::from_text(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(h.edge_connectivity().unwrap(), 0);
    assert_eq!(h.degrees(), vec![2; 6]);

    assert_eq!(code(&hyperconn(&["oracle", "--property", "super", "--r", "2", "--seq", "2,2,2"])), 0);
    assert_eq!(code(&hyperconn(&["oracle", "--property", "maximal", "--r", "2", "--seq", "3,3,3,3"])), 0);
    let o = hyperconn(&["--format", "json", "oracle", "--property", "k-edge", "--r", "3", "--k", "2", "--seq", "1,1,1,1"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["error"]["kind"], "not_hypergraphic");
}

#[test]
fn oracle_budget_flag_beats_environment() {
    let args = ["oracle", "--property", "k-edge", "--r", "2", "--k", "2", "--seq", "3,3,3,3,3,3"];
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperconn"));
        cmd.args(args).args(extra).env_remove("HYPERCONN_BUDGET");
        if let Some(b) = env {
            cmd.env("HYPERCONN_BUDGET", b);
        }
        cmd.output().unwrap().status.code().unwrap()
    };
    assert_eq!(run(None, &[]), 0);
    assert_eq!(run(Some("3"), &[]), 3);
    assert_eq!(run(Some("3"), &["--budget", "100000000"]), 0);
    assert_eq!(run(None, &["--budget", "3"]), 3);
    assert_eq!(run(Some("lots"), &[]), 2);
}

#[test]
fn lambda_and_superlambda_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_hypergraph(dir.path(), "k4.hg", &Hypergraph::complete(4, 2).unwrap());
    let o = hyperconn(&["lambda", "--file", &k4]);
    assert_eq!((code(&o), stdout(&o)), (0, "3\n".to_string()));
    let o = hyperconn(&["lambda", "--file", &k4, "--bruteforce"]);
    assert_eq!(stdout(&o), "3\n");
    assert_eq!(code(&hyperconn(&["superlambda", "--file", &k4])), 0);

    let c4 = Hypergraph::new(4, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
    let c4 = write_hypergraph(dir.path(), "c4.hg", &c4);
    assert_eq!(code(&hyperconn(&["superlambda", "--file", &c4])), 1);

    let bad = dir.path().join("bad.hg");
    std::fs::write(&bad, "3 2 1\n0 5\n").unwrap();
    assert_eq!(code(&hyperconn(&["lambda", "--file", bad.to_str().unwrap()])), 2);
}

#[test]
fn construct_round_trips_through_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.hg");
    let out = out.to_str().unwrap();
    let o = hyperconn(&["construct", "--n", "6", "--j", "3", "--r", "2", "--c", "1", "--t", "1", "--s", "1", "--out", out]);
    assert_eq!(code(&o), 0);
    let o = hyperconn(&["lambda", "--file", out]);
    assert!(stdout(&o).trim().parse::<u64>().unwrap() <= 1);

    let o = hyperconn(&["construct", "--n", "8", "--j", "4", "--r", "3", "--c", "2", "--t", "1,0", "--s", "3,1"]);
    assert_eq!(code(&o), 3);
    let o = hyperconn(&["construct", "--n", "6", "--j", "3", "--r", "2", "--c", "2", "--t", "1", "--s", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn witness_degrees_match_the_written_hypergraph() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.hg");
    let o = hyperconn(&[
        "--format", "json", "witness", "--r", "2", "--k", "2", "--seq", "2,2,2,2,2,2", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let h = Hypergraph::from_text(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let dprime: Vec<u64> = serde_json::from_value(v["result"]["dprime"].clone()).unwrap();
    assert_eq!(h.degree_sequence().unwrap().values(), dprime.as_slice());
    assert_eq!(h.edge_connectivity().unwrap(), 1);
    assert_eq!(v["result"]["lambda"], 1);

    let o = hyperconn(&["witness", "--r", "2", "--k", "2", "--seq", "3,3,3,3"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn thresholds_params_and_enumerate() {
    let o = hyperconn(&["thresholds", "--n", "12", "--r", "2", "--k", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("g=3 jstar=5\n"));

    let o = hyperconn(&["--format", "json", "params", "--n", "9", "--j", "4", "--r", "2", "--c", "2"]);
    assert_eq!(json(&o)["result"]["count"], 5);

    let o = hyperconn(&["--format", "json", "enumerate", "--r", "2", "--seq", "1,1,1,1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["result"]["count"], 3);
    let o = hyperconn(&["--format", "json", "enumerate", "--r", "2", "--seq", "1,1,1,1", "--limit", "2"]);
    assert_eq!(json(&o)["result"]["count"], 2);
}

#[test]
fn oracle_output_is_identical_across_worker_counts() {
    let run = |w: &str| hyperconn(&["--format", "json", "oracle", "--property", "super", "--r", "2", "--seq", "2,2,2,2,3,3,3,3", "--workers", w]);
    let one = run("1");
    for w in ["2", "3", "8"] {
        let other = run(w);
        assert_eq!(one.stdout, other.stdout);
        assert_eq!(one.status.code(), other.status.code());
    }
}
