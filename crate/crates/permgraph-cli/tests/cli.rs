use std::process::{Command, Output};

fn permgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permgraph")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = permgraph(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    permgraph(args).status.code().unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(stdout(&["perm", "code", "37168254"]).lines().next(), Some("(2,5,0,3,3,0,1,0)"));
    assert_eq!(stdout(&["perm", "decode", "(2,5,0,3,3,0,1,0)"]).trim(), "37168254");
    assert_eq!(stdout(&["reflect", "bfs", "P6"]).lines().next(), Some("5"));
    assert_eq!(stdout(&["reflect", "bfs", "P6", "--mixed"]).lines().next(), Some("3"));
    assert_eq!(stdout(&["reflect", "bfs", "spikes"]).lines().next(), Some("4"));
    assert_eq!(stdout(&["invgraph", "recognize", "C5"]).trim(), "not an inversion graph");
    assert_eq!(stdout(&["letters", "lettericity", "P6"]).lines().next(), Some("3"));
    assert_eq!(stdout(&["permletters", "ellperm", "C5"]).lines().next(), Some("2"));
}

#[test]
fn conversions_round_trip() {
    let json = stdout(&["convert", "--from", "graph6", "--to", "graph-json", "Bw"]);
    assert_eq!(json.trim(), r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#);
    assert_eq!(stdout(&["convert", "--from", "graph-json", "--to", "graph6", json.trim()]).trim(), "Bw");
    let json = stdout(&["convert", "--from", "perm", "--to", "perm-json", "31542"]);
    assert_eq!(json.trim(), "[3,1,5,4,2]");
    assert_eq!(stdout(&["convert", "--from", "perm-json", "--to", "perm", json.trim()]).trim(), "31542");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["convert", "--from", "graph6", "--to", "graph-json", "B!"]), 2);
    assert_eq!(code(&["perm", "code", "1224"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["reflect", "apply", "P3", r#"{"u":1,"v":3,"X":[1,3],"kind":"edge"}"#]), 1);
    assert_eq!(code(&["reflect", "apply", "P3", r#"{"u":1,"v":2,"X":[1,2,3],"kind":"edge"}"#]), 0);
    assert_eq!(code(&["reflect", "cyclic", "P4"]), 1);
    assert_eq!(code(&["graph", "catalog", "--n", "7"]), 3);
    assert_eq!(code(&["graph", "catalog", "--n", "3", "--cap-override", "8"]), 3);
    assert_eq!(code(&["graph", "catalog", "--n", "5", "--cap-override", "5"]), 0);
    assert_eq!(code(&["reflect", "bfs", "P9"]), 3);
    assert_eq!(code(&["verify", "99"]), 2);
}

#[test]
fn catalog_sizes() {
    for (n, count) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
        let out = stdout(&["graph", "catalog", "--n", &n.to_string(), "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], count);
    }
}

#[test]
fn experiments_are_reproducible() {
    for kind in ["three-same-letter", "separated-pairs", "monotone-runs", "random-lettericity"] {
        let args = ["experiment", kind, "--n", "6", "--samples", "200", "--seed", "11", "--format", "json"];
        let a = permgraph(&args);
        let b = permgraph(&args);
        assert_eq!(a.status.code(), Some(0), "{kind}");
        assert_eq!(a.stdout, b.stdout, "{kind}");
    }
    let other = permgraph(&["experiment", "three-same-letter", "--n", "6", "--samples", "200", "--seed", "12"]);
    let first = permgraph(&["experiment", "three-same-letter", "--n", "6", "--samples", "200", "--seed", "11"]);
    assert_ne!(other.stdout, first.stdout);
}

#[test]
fn three_letter_report_carries_reference() {
    let out = stdout(&["experiment", "three-same-letter", "--n", "7", "--samples", "2000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reference"], "81/256");
    let f = v["fixed_triple_frequency"].as_f64().unwrap();
    assert!((f - 81.0 / 256.0).abs() < 0.04, "{f}");
}

#[test]
fn runs_estimate_near_exact_mean() {
    let out = stdout(&["experiment", "monotone-runs", "--n", "7", "--samples", "4000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exact"], "453/140");
    let est = v["estimate"].as_f64().unwrap();
    assert!((est - 453.0 / 140.0).abs() < 0.1, "{est}");
}

#[test]
fn verify_subset() {
    let out = stdout(&["verify", "1", "12"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.starts_with("PASS")));
}
