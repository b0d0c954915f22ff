use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn galrat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galrat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn json_out(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_dihedral_16() {
    let v = json_out(&galrat(&["analyze", "--family", "dihedral:3", "--json"]));
    assert_eq!(v["report"]["order"], 16);
    assert_eq!(v["report"]["class_count"], 7);
    assert_eq!(v["report"]["rational_classes"].as_array().unwrap().len(), 5);
}

#[test]
fn analyze_cyclic_5() {
    let v = json_out(&galrat(&["analyze", "--family", "cyclic:5", "--json"]));
    assert_eq!(v["report"]["rational_classes"].as_array().unwrap().len(), 1);
    assert_eq!(v["report"]["rational_characters"].as_array().unwrap().len(), 1);
    assert_eq!(v["image_structure"], serde_json::json!({ "type": "cyclic", "order": 4 }));
}

#[test]
fn analyze_fixture_file() {
    let path = fixtures().join("sg_32_42.json");
    let v = json_out(&galrat(&["analyze", path.to_str().unwrap(), "--json"]));
    assert_eq!(v["report"]["irrational_character_count"], 4);
    assert_eq!(v["report"]["irrational_class_count"], 6);
}

#[test]
fn analyze_text_is_aligned() {
    let out = galrat(&["analyze", "--family", "symmetric:3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("  rational classes       3\n"), "{text}");
    assert!(text.contains("class  order  size  centralizer  field degree  rational\n"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(galrat(&["analyze", "--family", "dihedral:1"]).status.code(), Some(2));
    assert_eq!(galrat(&["analyze", "--family", "nonsense:3"]).status.code(), Some(2));
    assert_eq!(galrat(&["analyze", "/nonexistent/group.json"]).status.code(), Some(2));
    assert_eq!(galrat(&["analyze"]).status.code(), Some(2));
    assert_eq!(galrat(&["verify", "--theorem", "Z"]).status.code(), Some(2));
    assert_eq!(galrat(&["scan", "--corpus", "/nonexistent"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "degree": 3, "generators": [[0, 0, 1]]}"#).unwrap();
    let out = galrat(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generators[0]"));
}

#[test]
fn standalone_verifiers_pass() {
    for t in ["sn", "2groups", "s4s5"] {
        let out = galrat(&["verify", "--theorem", t]);
        assert_eq!(out.status.code(), Some(0), "{t}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn verify_tallies_on_builtin_corpus() {
    let v = json_out(&galrat(&["verify", "--theorem", "a", "--builtin-only", "--max-order", "24", "--json"]));
    let t = &v["tallies"]["theorem_a"];
    assert_eq!(t["fail"], 0);
    assert!(t["pass"].as_u64().unwrap() > 20);
}

fn write_corpus(dir: &Path, expected_irrational_classes: u64) {
    let src = std::fs::read_to_string(fixtures().join("sg_32_42.json")).unwrap();
    let mut v: Value = serde_json::from_str(&src).unwrap();
    v["expected"]["irrational_classes"] = expected_irrational_classes.into();
    std::fs::write(dir.join("g.json"), v.to_string()).unwrap();
}

#[test]
fn fixture_mismatch_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path(), 5);
    let out = galrat(&[
        "verify", "--theorem", "expected", "--corpus", dir.path().to_str().unwrap(), "--max-order", "32",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sg_32_42 expected"), "{text}");

    write_corpus(dir.path(), 6);
    let out = galrat(&[
        "verify", "--theorem", "expected", "--corpus", dir.path().to_str().unwrap(), "--max-order", "32",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_report_is_deterministic_and_flags_counts() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path(), 6);
    let c = dir.path().to_str().unwrap();
    let out_dir = tempfile::tempdir().unwrap();
    let r1 = out_dir.path().join("r1.json");
    let r2 = out_dir.path().join("r2.json");
    for r in [&r1, &r2] {
        let out = galrat(&["scan", "--corpus", c, "--max-order", "32", "--report", r.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    }
    let a = std::fs::read(&r1).unwrap();
    assert_eq!(a, std::fs::read(&r2).unwrap());
    let v: Value = serde_json::from_slice(&a).unwrap();
    let notable = v["notable"].as_array().unwrap();
    assert!(notable.iter().any(|n| n["group"] == "sg_32_42"));
    let ce = v["counterexamples"].as_array().unwrap();
    let status: Vec<(&str, &str)> = ce
        .iter()
        .map(|o| (o["group"].as_str().unwrap(), o["status"].as_str().unwrap()))
        .collect();
    assert_eq!(
        status,
        [("sg_32_42", "Pass"), ("sg_32_15", "NotApplicable"), ("sg_672_128", "NotApplicable")]
    );
}

#[test]
fn table_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.table.json");
    let out = galrat(&["table", "--family", "symmetric:3", "--report", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    let t = galrat_core::CharacterTable::import_json(&text).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 2]);
}
