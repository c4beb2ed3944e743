mod common;

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use common::{corpus_file, corpus_files, delzant_files};

fn ehrhart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(args)
        .env_remove("EHRHART_BUDGET")
        .output()
        .unwrap()
}

fn path(name: &str) -> String {
    corpus_file(name).to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn hilbert_cy_on_tetrahedron() {
    let o = ehrhart(&["hilbert-cy", &path("simplex3")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("boundary Ehrhart: 2k^2 + 2\n"));
    assert!(stdout(&o).contains("agree: yes"));
}

#[test]
fn validate_reports_the_bad_vertex() {
    let o = ehrhart(&["validate", &path("triangle_det2")]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("vertex (1,0): det 2 \u{2260} \u{b1}1"), "{}", stdout(&o));
    let o = ehrhart(&["validate", &path("simplex4")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn pyramid_is_not_simple() {
    for cmd in ["validate", "faces", "hilbert-cy"] {
        let o = ehrhart(&[cmd, &path("square_pyramid")]);
        assert_eq!(o.status.code(), Some(4));
        assert!(stderr(&o).contains("not simple"), "{}", stderr(&o));
    }
}

#[test]
fn boundary_count() {
    let o = ehrhart(&["count", "--k", "2", "--region", "boundary", &path("simplex2")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n");
    let o = ehrhart(&["count", "--k", "3", "--region", "interior", &path("simplex2")]);
    assert_eq!(stdout(&o), "1\n");
    let o = ehrhart(&["count", "--k", "5", "--region", "face:1,2", &path("simplex2")]);
    assert_eq!(stdout(&o), "1\n");
    let o = ehrhart(&["--threads", "3", "count", "--k", "4", &path("cube3_1")]);
    assert_eq!(stdout(&o), "125\n");
}

#[test]
fn ehrhart_methods_agree() {
    for kind in ["full", "boundary"] {
        let brute = ehrhart(&["ehrhart", "--kind", kind, &path("hirzebruch_2_3")]);
        let op = ehrhart(&["ehrhart", "--kind", kind, "--method", "operator", &path("hirzebruch_2_3")]);
        assert_eq!(brute.status.code(), Some(0));
        assert_eq!(stdout(&brute), stdout(&op));
    }
    let o = ehrhart(&["ehrhart", "--kind", "full", &path("simplex2")]);
    assert_eq!(stdout(&o), "(1/2)k^2 + (3/2)k + 1\n");
    let o = ehrhart(&["ehrhart", "--kind", "face:3", &path("simplex3")]);
    assert_eq!(stdout(&o), "(1/2)k^2 + (3/2)k + 1\n");
}

#[test]
fn formula_commands() {
    let o = ehrhart(&["khovanskii", "--k", "5", &path("simplex4")]);
    assert_eq!(stdout(&o), "126\n");
    let o = ehrhart(&["boundary-formula", "--k", "5", &path("simplex4")]);
    // C(9,4) - C(4,4)
    assert_eq!(stdout(&o), "125\n");
}

#[test]
fn exit_codes() {
    // usage: bad flag value, face index out of range, operator on interior
    assert_eq!(ehrhart(&["count", "--k", "0", &path("simplex2")]).status.code(), Some(2));
    assert_eq!(ehrhart(&["count", "--k", "1", "--region", "face:4", &path("simplex2")]).status.code(), Some(2));
    let o = ehrhart(&["ehrhart", "--kind", "interior", "--method", "operator", &path("simplex2")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(ehrhart(&["frobnicate"]).status.code(), Some(2));
    // io
    assert_eq!(ehrhart(&["faces", "/nonexistent/x.poly"]).status.code(), Some(1));
    // budget
    let o = ehrhart(&["--budget", "10", "count", "--k", "3", &path("simplex2")]);
    assert_eq!(o.status.code(), Some(6));
    assert!(stderr(&o).contains("budget"));
    let o = Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(["count", "--k", "3", &path("simplex2")])
        .env("EHRHART_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(6));
}

#[test]
fn parse_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("ehrhart-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("short.poly", "dim 2\nfacet -1 0\n", "line 2, column 1: 3 fields required for dim 2, got 2"),
        ("gcd.poly", "dim 2\nfacet 2 2 2\nfacet -1 0 0\nfacet 0 -1 0\n", "line 2, column 7"),
    ];
    for (name, text, needle) in cases {
        let file = dir.join(name);
        std::fs::write(&file, text).unwrap();
        let o = ehrhart(&["faces", file.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(3));
        assert!(stderr(&o).contains(needle), "{}", stderr(&o));
    }
    let file = dir.join("gcd.poly");
    let o = ehrhart(&["--normalize", "count", "--k", "1", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cross_check_passes_on_corpus() {
    for p in delzant_files() {
        let o = ehrhart(&["cross-check", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}\n{}", p.display(), stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let file = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(format!("{name}.schema.json"));
    let value: Value = serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

fn assert_valid(schema_name: &str, args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = ehrhart(&full);
    let value: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stderr(&o)));
    let compiled = schema(schema_name);
    if let Err(errors) = compiled.validate(&value) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{args:?} violates {schema_name}: {msgs:?}");
    }
    value
}

#[test]
fn json_output_matches_schemas() {
    for p in corpus_files() {
        let f = p.to_str().unwrap();
        let stem = p.file_stem().unwrap().to_str().unwrap();
        if stem == "square_pyramid" {
            continue;
        }
        let v = assert_valid("validate", &["validate", f]);
        assert_eq!(v["delzant"], Value::Bool(stem != "triangle_det2"));
        if stem == "triangle_det2" {
            continue;
        }
        assert_valid("faces", &["faces", f]);
        assert_valid("volume-poly", &["volume-poly", f]);
        assert_valid("count", &["count", "--k", "2", "--region", "face:1", f]);
        assert_valid("ehrhart", &["ehrhart", "--kind", "boundary", "--method", "operator", f]);
        assert_valid("formula-count", &["khovanskii", f]);
        assert_valid("formula-count", &["boundary-formula", "--k", "2", f]);
        let h = assert_valid("hilbert-cy", &["hilbert-cy", f]);
        assert_eq!(h["agree"], Value::Bool(true));
    }
    let c = assert_valid("cross-check", &["cross-check", &path("hirzebruch_1_2")]);
    assert_eq!(c["passed"], Value::Bool(true));
}

#[test]
fn tsv_has_a_header() {
    let o = ehrhart(&["--format", "tsv", "count", "--k", "2", &path("simplex2")]);
    assert_eq!(stdout(&o), "k\tregion\tcount\n2\tfull\t6\n");
}
