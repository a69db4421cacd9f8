use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spiked")).args(args).arg("--out").arg(dir).output().unwrap()
}

fn read(dir: &Path, name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

#[test]
fn enumerate_writes_surface_and_betas() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["enumerate", "--family", "crown", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let e = read(dir.path(), "enumerate.json");
    assert_eq!(e["simple_betas"].as_array().unwrap().len(), 5);
    assert_eq!(e["config"]["family"], "crown");
    assert_eq!(read(dir.path(), "surface.json")["dimension"], 4);
}

#[test]
fn invalid_inputs_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["enumerate", "--family", "torus"][..],
        &["enumerate", "--family", "polygon", "--n", "2"],
        &["enumerate", "--n", "2", "--decorate", "0b100"],
        &["complex", "--family", "crown", "--n", "2", "--mark", "B:9>9:w0"],
        &["realize", "--family", "moebius", "--n", "2"],
        &["verify", "--family", "annulus"],
    ] {
        assert_eq!(run(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn complex_json_lists_maximal_simplices() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["complex", "--family", "polygon", "--n", "3", "--decorate", "none"]);
    assert_eq!(out.status.code(), Some(0));
    let c = read(dir.path(), "complex.json");
    assert!(c["vertices"].is_array() && c["maximal"].is_array());
}

#[test]
fn certify_sweeps_markings() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["certify", "--family", "punctured", "--n", "2", "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    let c = read(dir.path(), "certify.json");
    let results = c["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    assert!(results.iter().all(|r| r["status"] == "match"));
    assert!(dir.path().join("certify.md").exists());
}

#[test]
fn realize_and_cone() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["realize", "--family", "punctured", "--n", "3", "--seed", "5"]).status.code(), Some(0));
    assert_eq!(read(dir.path(), "metric.json")["chart"], "punctured-parabolic");
    assert_eq!(run(dir.path(), &["cone", "--family", "crown", "--n", "2", "--decorate", "0b01"]).status.code(), Some(0));
    let c = read(dir.path(), "cone.json");
    for key in ["dim", "rows", "vertices", "faces"] {
        assert!(!c[key].is_null(), "{key}");
    }
    assert!(c["rows"][0]["beta"].is_string() && c["rows"][0]["coeffs"].is_array());
    assert!(c["faces"][0]["tight"].is_array() && c["faces"][0]["verts"].is_array());
}

#[test]
fn compare_and_verify_match() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["compare", "--family", "polygon", "--n", "4"]).status.code(), Some(0));
    assert!(read(dir.path(), "report.json")["claims"].is_array());
    let out = run(dir.path(), &["verify", "--family", "crown", "--nmax", "3", "--rmode", "all", "--kmax", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(std::fs::read_to_string(dir.path().join("report.md")).unwrap().contains("| claim |"));
}

#[test]
fn appendix_prism() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["reproduce-appendix-b"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("triangular prism: MATCH"));
    assert!(std::fs::read_to_string(dir.path().join("prism.svg")).unwrap().contains("<svg"));
    assert_eq!(read(dir.path(), "appendix_b.json")["spread_subsets"].as_array().unwrap().len(), 21);
}

#[test]
fn json_only_skips_markdown() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["compare", "--family", "crown", "--n", "1", "--format", "json"]);
    assert!(dir.path().join("report.json").exists());
    assert!(!dir.path().join("report.md").exists());
}
