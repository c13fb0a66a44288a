//! Exit-code and plumbing checks for the binary.

use std::process::Command;

use orepack_core::format::serialize_graph;
use orepack_core::graph::Graph;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_orepack"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn missing_file_exits_1() {
    let (_, err, code) = run(&["pack", "--g", "/nonexistent/g", "--h", "/nonexistent/h"]);
    assert_eq!(code, 1);
    assert!(err.contains("error:"));
}

#[test]
fn malformed_graph_exits_1_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n0 x\n").unwrap();
    let (_, err, code) = run(&["brute-ex", "--h", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn pack_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g_path = dir.path().join("g.txt");
    let h_path = dir.path().join("h.txt");
    let map_path = dir.path().join("map.txt");
    std::fs::write(&g_path, serialize_graph(&Graph::perfect_matching(400))).unwrap();
    std::fs::write(&h_path, serialize_graph(&Graph::cycle(400))).unwrap();

    let (out, _, code) = run(&[
        "pack",
        "--g",
        g_path.to_str().unwrap(),
        "--h",
        h_path.to_str().unwrap(),
        "--maxdeg-divisor",
        "2",
        "--map-out",
        map_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "stdout: {out}");
    assert!(out.contains("\"outcome\": \"success\""));

    let (vout, _, vcode) = run(&[
        "verify",
        "--g",
        g_path.to_str().unwrap(),
        "--h",
        h_path.to_str().unwrap(),
        "--map",
        map_path.to_str().unwrap(),
    ]);
    assert_eq!(vcode, 0, "stdout: {vout}");

    // Corrupt the map: identity sends matching edges onto cycle edges.
    let identity: String = (0..400).map(|v| format!("{v}\n")).collect();
    std::fs::write(&map_path, identity).unwrap();
    let (_, _, bad_code) = run(&[
        "verify",
        "--g",
        g_path.to_str().unwrap(),
        "--h",
        h_path.to_str().unwrap(),
        "--map",
        map_path.to_str().unwrap(),
    ]);
    assert_eq!(bad_code, 3);
}

#[test]
fn input_hypothesis_failure_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let g_path = dir.path().join("g.txt");
    let h_path = dir.path().join("h.txt");
    // 400 missing edges exceed the n - delta - 1 = 398 bound.
    std::fs::write(&g_path, serialize_graph(&Graph::cycle(400))).unwrap();
    std::fs::write(&h_path, serialize_graph(&Graph::perfect_matching(400))).unwrap();
    let (_, err, code) = run(&[
        "pack",
        "--g",
        h_path.to_str().unwrap(),
        "--h",
        h_path.to_str().unwrap(),
    ]);
    // perfect matching as G is fine; as H at n=400 the degree bound fails
    assert_eq!(code, 1, "stderr: {err}");
    assert!(err.contains("max degree"), "stderr: {err}");
}

#[test]
fn construct_writes_instances() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("t.txt");
    let (out, _, code) = run(&[
        "construct",
        "hyper-t",
        "--n",
        "16",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\"edges\": 494"), "stdout: {out}");
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("16 494\n"));

    let (_, err, bad) = run(&["construct", "frobnicate"]);
    assert_eq!(bad, 1);
    assert!(err.contains("unknown construction"));
}

#[test]
fn hyper_check_reports_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let t_path = dir.path().join("t.txt");
    let h_path = dir.path().join("h.txt");
    run(&["construct", "hyper-t", "--n", "16", "--out", t_path.to_str().unwrap()]);
    run(&["construct", "hyper-h", "--s", "3", "--out", h_path.to_str().unwrap()]);
    let (out, _, code) = run(&[
        "hyper-check",
        "--t",
        t_path.to_str().unwrap(),
        "--h",
        h_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("no_spanning_copy"), "stdout: {out}");
}

#[test]
fn brute_ex_matches_known_value() {
    let dir = tempfile::tempdir().unwrap();
    let h_path = dir.path().join("h.txt");
    std::fs::write(&h_path, serialize_graph(&Graph::cycle(6))).unwrap();
    let (out, _, code) = run(&["brute-ex", "--h", h_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("\"ex_value\": 11"), "stdout: {out}");

    let (eout, _, ecode) = run(&["enumerate", "--h", h_path.to_str().unwrap()]);
    assert_eq!(ecode, 0);
    assert!(eout.contains("\"class_count\": 1"), "stdout: {eout}");
}
