use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn herzog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_herzog")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn rnc_file(n: usize) -> String {
    let mut s = format!("# rational normal curve of degree {n}\nvars: {}\n", n + 1);
    for i in 0..n {
        for j in i + 1..n {
            s.push_str(&format!("X{i}*X{} - X{j}*X{}\n", j + 1, i + 1));
        }
    }
    s
}

const TWISTED: &str = "X0*X2 - X1^2\nX0*X3 - X1*X2\nX1*X3 - X2^2\n";

#[test]
fn gb_of_the_rational_normal_curve() {
    let path = scratch("rnc5.ideal", &rnc_file(5));
    let out = herzog(&["gb", path.to_str().unwrap(), "--order", "lex"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let init: Vec<String> = v["result"]["initial_ideal"].as_array().unwrap().iter().map(|m| m.as_str().unwrap().to_string()).collect();
    let mut expected = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            expected.push(format!("X{i}*X{}", j + 1));
        }
    }
    assert_eq!(init, expected);
    assert_eq!(v["result"]["squarefree"], true);
}

#[test]
fn reports_carry_provenance() {
    let path = scratch("twisted.ideal", TWISTED);
    let p = path.to_str().unwrap();
    for verb in ["gb", "initial", "eliminate", "genus", "smooth", "project"] {
        let out = herzog(&[verb, p, "--seed", "5"]);
        assert_eq!(out.status.code(), Some(0), "{verb}: {}", String::from_utf8_lossy(&out.stderr));
        let prov = &json(&out)["provenance"];
        assert_eq!(prov["input_sha256"].as_str().unwrap().len(), 64);
        assert_eq!(prov["order"], "lex");
        assert_eq!(prov["field"], "QQ");
        assert_eq!(prov["seed"], 5);
        assert_eq!(prov["degree_ceiling"], 12);
        assert_eq!(prov["power_bound"], 8);
    }
}

#[test]
fn smooth_report_shape() {
    let cubic = scratch("twisted_smooth.ideal", TWISTED);
    let v = json(&herzog(&["smooth", cubic.to_str().unwrap()]));
    assert_eq!(v["result"]["smooth"], true);
    assert_eq!(v["result"]["genus"], 0);
    assert_eq!(v["result"]["degree"], 3);
    assert_eq!(v["result"]["hilbert_polynomial"], serde_json::json!([1, 3]));

    let nodal = scratch("nodal.ideal", "X1^2*X2 - X0^3 - X0^2*X2\n");
    let out = herzog(&["smooth", nodal.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["smooth"], false);
    assert_eq!(v["result"]["singular_points"], serde_json::json!(["[0:0:1]"]));
}

#[test]
fn collapse_of_the_four_cycle() {
    let path = scratch("c4.json", r#"{"n": 3, "edges": [[0,1],[1,2],[2,3],[3,0]]}"#);
    let out = herzog(&["collapse", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["ell"], 0);
    assert_eq!(v["result"]["is_tree"], false);
    assert_eq!(v["result"]["branches_agree"], true);
}

#[test]
fn homology_of_a_path() {
    let path = scratch("path.json", r#"{"n": 3, "facets": [[0,1],[1,2],[2,3]]}"#);
    let v = json(&herzog(&["homology", path.to_str().unwrap(), "--field", "Fp:2"]));
    assert_eq!(v["result"]["acyclic"], true);
    assert_eq!(v["result"]["cohen_macaulay"], true);
    assert_eq!(v["result"]["hilbert_polynomial"], serde_json::json!([1, 3]));
}

#[test]
fn fiber_over_a_coordinate_point() {
    let path = scratch("conic.ideal", "X0*X2 + 3*X2^2 - X1^2\n");
    let out = herzog(&["fiber", path.to_str().unwrap(), "--vertex", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["mu"], "-3");
    assert_eq!(v["result"]["q"], serde_json::json!(["1", "0", "-1/3"]));
}

#[test]
fn output_is_byte_identical() {
    let spec = scratch(
        "square.json",
        r#"{"complex": {"n": 3, "edges": [[0,1],[1,2],[2,3],[3,0]]}, "field": "QQ", "coeff_grid": [-1, 0, 1], "sampler": {"seed": 3, "count": 200}}"#,
    );
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    for (target, jobs) in [(&a, "1"), (&b, "3")] {
        let out = herzog(&["sweep", spec.to_str().unwrap(), "--jobs", jobs, "--out", target.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["result"]["smooth"], 0);
    assert_eq!(v["provenance"]["seed"], 3);
}

#[test]
fn triangle_sweep_passes() {
    let spec = scratch("triangle.json", r#"{"complex": {"n": 2, "edges": [[0,1],[1,2],[0,2]]}, "order": "lex", "field": "Fp:3"}"#);
    let out = herzog(&["sweep", spec.to_str().unwrap(), "--table"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["generated"], 243);
    assert_eq!(v["result"]["pass"], true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
}

#[test]
fn tree_search_reports_honest_absence() {
    let spec = scratch(
        "path_tiny.json",
        r#"{"complex": {"n": 2, "edges": [[0,1],[1,2]]}, "field": "Fp:2", "max_candidates": 1}"#,
    );
    let out = herzog(&["sweep", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["result"]["status"], "not_found_within_budget");
}

#[test]
fn input_errors_exit_with_two() {
    let bad = scratch("bad.ideal", "vars: 3\nX0*X1\nX0 + * X2\n");
    let out = herzog(&["gb", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.ideal:3:6"), "{err}");

    let headed = scratch("headed.ideal", &format!("field: QQ\norder: lex\n{TWISTED}"));
    let out = herzog(&["gb", headed.to_str().unwrap(), "--field", "Fp:5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("QQ") && err.contains("Fp:5"), "{err}");
    let out = herzog(&["gb", headed.to_str().unwrap(), "--order", "degrevlex"]);
    assert_eq!(out.status.code(), Some(2));

    assert_eq!(herzog(&["gb", "/nonexistent.ideal"]).status.code(), Some(2));
    assert_eq!(herzog(&["gb", bad.to_str().unwrap(), "--field", "Fp:4"]).status.code(), Some(2));
    assert_eq!(herzog(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn degree_ceiling_exits_with_three() {
    let path = scratch("ceiling.ideal", TWISTED);
    let out = herzog(&["gb", path.to_str().unwrap(), "--degree-ceiling", "2"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_examples_passes() {
    let out = herzog(&["verify-examples"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["result"]["pass"], true);
    assert!(v["result"]["checks"].as_array().unwrap().len() >= 16);
}
