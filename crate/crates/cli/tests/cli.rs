use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_resonantk"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn emit(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.rot"));
    let out = run(&["catalog", "emit", name, "-o", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn analyze_json_for_f24() {
    let dir = tempfile::tempdir().unwrap();
    let f24 = emit(dir.path(), "F24");
    let out = run(&["analyze", f24.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sextet_polynomial"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["resonance"]["order"], "ALL");
    assert_eq!(v["counts"]["hexagons"], 2);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn batch_analyze_preserves_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let names = ["F28", "F20", "F40"];
    let paths: Vec<String> = names
        .iter()
        .map(|n| emit(dir.path(), n).to_str().unwrap().to_string())
        .collect();
    let mut args = vec!["analyze", "--json"];
    args.extend(paths.iter().map(String::as_str));
    let out = run(&args);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let vertices: Vec<_> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["counts"]["vertices"].as_u64().unwrap())
        .collect();
    assert_eq!(vertices, [28, 20, 40]);
}

#[test]
fn order_of_c70() {
    let dir = tempfile::tempdir().unwrap();
    let c70 = emit(dir.path(), "C70");
    let out = run(&["order", c70.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("2\n"), "{text}");
    assert!(text.contains("failing set"), "{text}");
}

#[test]
fn malformed_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.rot");
    std::fs::write(&bad, "3\n0: 1 2\n1: 0 2\n2: 0 1\n").unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let missing = dir.path().join("missing.rot");
    assert_eq!(run(&["analyze", missing.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn caps_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let c60 = emit(dir.path(), "C60");
    let path = c60.to_str().unwrap();
    assert_eq!(run(&["fries", path, "--pm-cap", "10"]).status.code(), Some(2));
    let out = bin()
        .args(["fries", path])
        .env("RESONANTK_PM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn leapfrog_writes_image_matching_and_provenance() {
    let dir = tempfile::tempdir().unwrap();
    let f20 = emit(dir.path(), "F20");
    let image = dir.path().join("image.rot");
    let m0 = dir.path().join("m0.txt");
    let prov = dir.path().join("prov.json");
    let out = run(&[
        "leapfrog",
        f20.to_str().unwrap(),
        "-o",
        image.to_str().unwrap(),
        "--emit-matching",
        m0.to_str().unwrap(),
        "--provenance",
        prov.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let a = run(&["analyze", image.to_str().unwrap(), "--json"]);
    let b = run(&["catalog", "emit", "C60"]);
    let c60 = dir.path().join("c60.rot");
    std::fs::write(&c60, &b.stdout).unwrap();
    let c = run(&["analyze", c60.to_str().unwrap(), "--json"]);
    let va: Value = serde_json::from_slice(&a.stdout).unwrap();
    let vc: Value = serde_json::from_slice(&c.stdout).unwrap();
    assert_eq!(va["canonical_sha256"], vc["canonical_sha256"]);
    let m0 = std::fs::read_to_string(m0).unwrap();
    assert_eq!(m0.lines().filter(|l| !l.trim().is_empty()).count(), 30);
    let prov: Value = serde_json::from_str(&std::fs::read_to_string(prov).unwrap()).unwrap();
    assert_eq!(prov.as_array().unwrap().len(), 32);
}

#[test]
fn catalog_commands() {
    let list = stdout(&run(&["catalog", "list"]));
    for name in ["F20", "F36_1", "C60", "C70"] {
        assert!(list.contains(name), "{list}");
    }
    let verify = run(&["catalog", "verify"]);
    assert!(verify.status.success(), "{}", stdout(&verify));
    assert_eq!(run(&["catalog", "emit", "F99"]).status.code(), Some(1));
}

#[test]
fn nanotube_is_valid_and_not_two_resonant() {
    let dir = tempfile::tempdir().unwrap();
    let tube = dir.path().join("tube.rot");
    let out = run(&["nanotube", "--cap", "r6", "--rings", "2", "-o", tube.to_str().unwrap()]);
    assert!(out.status.success());
    let path = tube.to_str().unwrap();
    assert!(run(&["validate", path]).status.success());
    let order = stdout(&run(&["order", path, "--max-k", "2"]));
    assert!(order.starts_with("1\n") || order.starts_with("0\n"), "{order}");
    assert_eq!(run(&["nanotube", "--cap", "r5", "--rings", "0"]).status.code(), Some(1));
}

#[test]
fn rings_and_fragments_json() {
    let dir = tempfile::tempdir().unwrap();
    let f36 = emit(dir.path(), "F36_1");
    let path = f36.to_str().unwrap();
    let frags: Value =
        serde_json::from_slice(&run(&["fragments", path, "--json"]).stdout).unwrap();
    let turtles = frags
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["shape"] == "TURTLE")
        .count();
    assert_eq!(turtles, 2);
    let f28 = emit(dir.path(), "F28");
    let rings = run(&["rings", f28.to_str().unwrap(), "--pentagonal", "--json"]);
    assert!(rings.status.success());
    let rings: Value = serde_json::from_slice(&rings.stdout).unwrap();
    assert!(!rings.as_array().unwrap().is_empty());
}
