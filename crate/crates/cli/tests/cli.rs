use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn code(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../codes");
    dir.join(name).to_string_lossy().into_owned()
}

fn ghws(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghws")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = ghws(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out).trim().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&ok(&all)).unwrap()
}

#[test]
fn reed_solomon_hierarchy() {
    assert_eq!(ok(&["hierarchy", &code("rs13_4.txt")]), "10 11 12 13");
    assert_eq!(ok(&["hierarchy", "--auto", &code("rs13_4.txt")]), "10 11 12 13");
    assert_eq!(ok(&["hierarchy", "--algorithm", "naive", &code("rs13_4.txt")]), "10 11 12 13");
}

#[test]
fn relative_pair() {
    let (c1, c2) = (code("pair_c1.txt"), code("pair_c2.txt"));
    assert_eq!(ok(&["rghw", &c1, &c2, "-r", "2"]), "4");
    assert_eq!(ok(&["rghw", &c1, &c2, "-r", "2", "--algorithm", "naive"]), "4");
    assert_eq!(ok(&["rhierarchy", &c1, &c2]), "2 4");
    assert_eq!(ok(&["rhierarchy", &code("pair_c1b.txt"), &code("pair_c2b.txt"), "--low-mem"]), "2 4");
    let out = ghws(&["rghw", &c2, &c1, "-r", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_schema_and_text_agree() {
    let h = code("hamming7.txt");
    let doc = json(&["ghw", &h, "-r", "2"]);
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["op", "n", "k", "q", "r", "value", "elapsed_ms"]);
    assert_eq!(doc["op"], "ghw");
    assert_eq!((doc["n"].as_u64(), doc["k"].as_u64(), doc["q"].as_u64()), (Some(7), Some(4), Some(2)));
    assert_eq!(doc["r"], 2);
    assert_eq!(doc["value"].to_string(), ok(&["ghw", &h, "-r", "2"]));
    assert!(doc["elapsed_ms"].as_f64().unwrap() >= 0.0);

    let doc = json(&["hierarchy", &h]);
    assert_eq!(doc["value"], serde_json::json!([3, 5, 6, 7]));
    assert_eq!(doc["r"], Value::Null);

    assert_eq!(ok(&["mindist", &h]), ok(&["ghw", &h, "-r", "1"]));
    assert_eq!(json(&["mindist", &h])["value"], 3);
}

#[test]
fn spectrum_output() {
    let h = code("hamming7.txt");
    let text = ok(&["spectrum", &h]);
    assert!(text.lines().any(|l| l == "r=1 3:7 4:7 7:1"), "{text}");
    let doc = json(&["spectrum", &h]);
    assert_eq!(doc["value"]["0"]["0"], 1);
    assert_eq!(doc["value"]["2"]["5"], 21);
    let out = ghws(&["spectrum", &h, "--work-limit", "3"]);
    assert_eq!(out.status.code(), Some(1));

    let doc = json(&["rspectrum", &code("pair_c1.txt"), &code("pair_c2.txt")]);
    let first: u64 = doc["value"]["1"].as_object().unwrap().values().map(|v| v.as_u64().unwrap()).sum();
    assert_eq!(first, 24);
    assert!(doc["value"]["2"].as_object().unwrap().keys().all(|w| w.parse::<usize>().unwrap() >= 4));
}

#[test]
fn duality() {
    assert_eq!(ok(&["duality", "-n", "7", "3", "5", "6", "7"]), "4 6 7");
    assert_eq!(ok(&["duality", "-n", "3"]), "1 2 3");
    assert_eq!(ghws(&["duality", "-n", "7", "5", "3"]).status.code(), Some(1));
}

#[test]
fn verbose_lines_go_to_stderr() {
    let out = ghws(&["ghw", &code("rm5_2_2.txt"), "-r", "2", "--verbose", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "19");
    let err = String::from_utf8(out.stderr).unwrap();
    let lines: Vec<&str> = err.lines().collect();
    assert!(!lines.is_empty());
    for line in lines {
        let keys: Vec<&str> = line.split(' ').map(|kv| kv.split_once('=').unwrap().0).collect();
        assert_eq!(keys, ["w", "lower", "upper", "mats", "subspaces", "t"], "{line}");
    }
}

#[test]
fn benchmark_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let table =
        ok(&["benchmark", &code("hamming7.txt"), &code("rs13_4.txt"), "-r", "2", "--csv", csv.to_str().unwrap()]);
    assert_eq!(table.lines().count(), 3);
    let written = std::fs::read_to_string(&csv).unwrap();
    let mut lines = written.lines();
    assert_eq!(lines.next(), Some("code,n,k,q,r,value,bz_ms,naive_ms,speedup"));
    let values: Vec<&str> = lines.map(|l| l.split(',').nth(5).unwrap()).collect();
    assert_eq!(values, ["5", "11"]);

    let doc = json(&["benchmark", &code("hamming7.txt"), "-r", "1"]);
    assert_eq!(doc["value"][0]["value"], 3);
}

#[test]
fn exit_codes() {
    let h = code("hamming7.txt");
    assert_eq!(ghws(&["ghw", &h]).status.code(), Some(2));
    assert_eq!(ghws(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ghws(&["ghw", "no/such/file.txt", "-r", "1"]).status.code(), Some(2));
    assert_eq!(ghws(&["benchmark", "-r", "1"]).status.code(), Some(2));
    assert_eq!(ghws(&["ghw", &h, "-r", "9"]).status.code(), Some(1));
    assert_eq!(ghws(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "field: p=4 s=1\n1 0\n").unwrap();
    let out = ghws(&["ghw", bad.to_str().unwrap(), "-r", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a prime"));
    std::fs::write(&bad, "field: p=2 s=1\n1 0\n0 x\n").unwrap();
    let out = ghws(&["ghw", bad.to_str().unwrap(), "-r", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}
