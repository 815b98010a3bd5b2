use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use peo_core::report::parse_flat_map;
use peo_core::{fixtures, is_peo, Certificate, LinearOrder};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn peo(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_peo")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn order_on_unique_simplicial_fixture() {
    let (code, out, _) = peo(&["order", &path("unique_simplicial_4.mat")]);
    assert_eq!(code, 0);
    let pi: LinearOrder = out.trim().strip_prefix("PEO:").unwrap().parse().unwrap();
    assert!(is_peo(&fixtures::unique_simplicial_4(), &pi).unwrap().holds());
}

#[test]
fn order_on_fixtures_without_peo() {
    for (file, a) in [
        ("no_simplicial_5.mat", fixtures::no_simplicial_5()),
        ("six_pair_only.mat", fixtures::six_pair_only()),
        ("chordless_cycle_5.mat", fixtures::chordless_cycle_5()),
    ] {
        let (code, out, _) = peo(&["order", &path(file)]);
        assert_eq!(code, 1, "{file}");
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("NO-PEO"));
        let cert: Certificate = lines.next().unwrap().parse().unwrap();
        assert!(!cert.is_ordering());
        cert.validate(&a).unwrap();
    }
}

#[test]
fn io_and_parse_errors_exit_two() {
    assert_eq!(peo(&["order", "/nonexistent/input.mat"]).0, 2);
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "n 3\n1 2 x").unwrap();
    let (code, _, err) = peo(&["order", bad.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    assert_eq!(peo(&["frobnicate"]).0, 2);
    assert_eq!(peo(&["classify", &path("unique_simplicial_4.mat"), "--max-len", "1"]).0, 2);
}

#[test]
fn check_dispatch() {
    let d = path("unique_simplicial_4.mat");
    assert_eq!(peo(&["check", &d, "--order", "4 2 1 3"]), (0, "OK\n".into(), String::new()));
    assert_eq!(peo(&["check", &d, "--order", "4 1 2 3", "--class", "peo"]).1, "VIOLATION: 1 2 3\n");
    let (code, out, _) = peo(&["check", &d, "--order", "4 2 1 3", "--class", "robinson"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("VIOLATION:"));
    assert_eq!(peo(&["check", &d, "--order", "4 2 2 3"]).0, 2);
    assert_eq!(peo(&["check", &d, "--order", "1 2 3"]).0, 2);
}

#[test]
fn classify_chordless_cycle_fixture() {
    let (code, out, _) = peo(&["classify", &path("chordless_cycle_5.mat"), "--machine"]);
    assert_eq!(code, 0);
    let m = parse_flat_map(&out).unwrap();
    assert_eq!(m.get("levels_chordal"), Some("yes/yes"));
    assert_ne!(m.get("weighted_chordless_cycle"), Some("none"));
    assert_eq!(m.get("peo"), Some("no"));
}

#[test]
fn classify_pair_only_fixture() {
    let (code, out, _) = peo(&["classify", &path("six_pair_only.mat"), "--machine"]);
    assert_eq!(code, 0);
    let m = parse_flat_map(&out).unwrap();
    assert_eq!(m.get("simplicial"), Some("none"));
    assert_eq!(m.get("peo"), Some("no"));
    assert_eq!(m.get("single_walk"), Some("none"));
    assert_ne!(m.get("pair"), Some("none"));
    let cert: Certificate = m.get("certificate").unwrap().parse().unwrap();
    cert.validate(&fixtures::six_pair_only()).unwrap();
}

#[test]
fn classify_constant_matrix() {
    let (code, out, _) = peo(&["classify", &path("constant_4.mat")]);
    assert_eq!(code, 0);
    assert!(out.contains("ultrametric: yes\n"));
    assert!(out.contains("peo: yes\n"));
}

#[test]
fn machine_output_round_trips() {
    for args in [
        vec!["classify", "no_simplicial_5.mat"],
        vec!["order", "six_pair_only.mat"],
        vec!["check", "unique_simplicial_4.mat", "--order", "4 2 1 3"],
        vec!["power", "path_5.graph"],
    ] {
        let mut full: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        full[1] = path(args[1]);
        full.push("--machine".into());
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let (_, out, _) = peo(&refs);
        let m = parse_flat_map(&out).unwrap();
        assert!(!m.is_empty());
        assert_eq!(m.to_string(), out);
    }
}

#[test]
fn power_on_path_and_cycle() {
    let (code, out, _) = peo(&["power", &path("path_5.graph"), "--machine"]);
    assert_eq!(code, 0);
    let m = parse_flat_map(&out).unwrap();
    for key in ["peo", "no_weighted_chordless_cycle", "levels_chordal", "graph_and_square_chordal"] {
        assert_eq!(m.get(key), Some("yes"), "{key}");
    }
    let (code, out, _) = peo(&["power", &path("cycle_6.graph"), "--machine"]);
    assert_eq!(code, 0);
    let m = parse_flat_map(&out).unwrap();
    for key in ["peo", "no_weighted_chordless_cycle", "levels_chordal", "graph_and_square_chordal"] {
        assert_eq!(m.get(key), Some("no"), "{key}");
    }
    assert_eq!(peo(&["power", &path("path_5.graph"), "--kmax", "2"]).0, 2);
}

#[test]
fn power_on_a_tree() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "n 7\n1 2\n1 3\n2 4\n2 5\n3 6\n6 7").unwrap();
    let (code, out, _) = peo(&["power", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("equivalent: yes"));
}

#[test]
fn graph_input_for_order() {
    let (code, _, _) = peo(&["order", "--format", "graph", &path("cycle_4.graph")]);
    assert_eq!(code, 1);
    let (code, out, _) = peo(&["order", "--format", "graph", &path("path_5.graph")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PEO:"));
}

#[test]
fn selfcheck_is_deterministic() {
    let a = peo(&["selfcheck", "--seed", "3", "--count", "50", "--machine"]);
    let b = peo(&["selfcheck", "--seed", "3", "--count", "50", "--machine"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    assert_eq!(parse_flat_map(&a.1).unwrap().get("disagreements"), Some("0"));
}
