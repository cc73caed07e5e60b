use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cayley::report::{comparison_body, Format};
use serde_json::Value;

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley")).args(args).output().expect("run cayley")
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("cayley-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

fn golden_src() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn schema_valid(bytes: &[u8]) -> bool {
    let schema: Value =
        serde_json::from_str(include_str!("../schema/report.schema.json")).expect("schema is JSON");
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let doc: Value = serde_json::from_slice(bytes).expect("output is JSON");
    compiled.is_valid(&doc)
}

#[test]
fn passing_suites_exit_zero() {
    for args in [&["verify", "algebra"][..], &["verify", "forms"], &["fixed-points"], &["betti"], &["g2-stabilizer"]] {
        let out = cayley(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["report"][..],
        &["verify", "octonions"],
        &["smoothness", "--point", "0257"],
        &["smoothness", "--point", "012"],
        &["weights", "--point", "0123", "--subgroup", "1,2"],
        &["--format", "xml", "betti"],
    ] {
        assert_eq!(cayley(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_output_matches_the_schema() {
    for args in [
        &["verify", "torus"][..],
        &["smoothness", "--point", "0246"],
        &["weights", "--point", "0247"],
        &["singular-locus"],
    ] {
        let mut a = vec!["--format", "json"];
        a.extend_from_slice(args);
        let out = cayley(&a);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(schema_valid(&out.stdout), "{args:?}");
    }
    assert!(schema_valid(b"[]"));
    assert!(!schema_valid(br#"[{"check_id": "x", "status": "ok", "expected": 1, "actual": 1, "elapsed_ms": 0}]"#));
}

#[test]
fn singular_point_record() {
    let out = cayley(&["--format", "json", "smoothness", "--point", "0246"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let rank = v.as_array().unwrap().iter().find(|c| c["check_id"] == "rank.0246").expect("rank check");
    assert_eq!(rank["status"], "pass");
    assert!(rank["actual"].as_u64().unwrap() < 4);
}

#[test]
fn out_writes_a_file() {
    let dir = scratch("out");
    let path = dir.join("forms.json");
    let out = cayley(&["--format", "json", "--out", path.to_str().unwrap(), "verify", "forms"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = fs::read(&path).unwrap();
    assert!(schema_valid(&written));
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn invalid_golden_json_fails_the_run() {
    let dir = scratch("broken");
    fs::write(dir.join("forms.json"), "{ not json").unwrap();
    let out = cayley(&["--golden", dir.to_str().unwrap(), "--format", "json", "verify", "forms"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("golden.load"));
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn altered_golden_value_is_reported() {
    let dir = scratch("altered");
    let text = fs::read_to_string(golden_src().join("jacobian_0123.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["matrix"][0][0] = Value::String("1".into());
    fs::write(dir.join("jacobian_0123.json"), serde_json::to_string(&v).unwrap()).unwrap();
    let out = cayley(&["--golden", dir.to_str().unwrap(), "--format", "json", "smoothness"]);
    assert_eq!(out.status.code(), Some(1));
    let checks: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = checks
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["check_id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["jacobian.0123"]);
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn unaltered_golden_copy_passes() {
    let dir = scratch("copy");
    for e in fs::read_dir(golden_src()).unwrap() {
        let e = e.unwrap();
        fs::copy(e.path(), dir.join(e.file_name())).unwrap();
    }
    let out = cayley(&["--golden", dir.to_str().unwrap(), "smoothness"]);
    assert_eq!(out.status.code(), Some(0));
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn json_is_deterministic_up_to_timing() {
    let a = cayley(&["--format", "json", "weights"]);
    let b = cayley(&["--format", "json", "weights"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(comparison_body(&a.stdout, Format::Json), comparison_body(&b.stdout, Format::Json));
}

#[test]
fn weights_section_ends_with_the_count() {
    let out = cayley(&["weights", "--point", "0247"]);
    let md = String::from_utf8(out.stdout).unwrap();
    let body = String::from_utf8(comparison_body(md.as_bytes(), Format::Md)).unwrap();
    assert!(body.trim_end().ends_with("positive weights: 1"), "{body}");
}
