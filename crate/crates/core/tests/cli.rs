use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use itype::catalog;
use itype::io::write_solution;
use serde_json::Value;
use sha2::{Digest, Sha256};
use tempfile::TempDir;

fn itype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_itype"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_sol_b() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "sol-b.json", &write_solution(&catalog::sol_b()));
    let out = itype(&["analyze", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["order"], 48);
    assert_eq!(r["center_order"], 4);
    assert_eq!(r["property_c"], false);
    assert_eq!(r["is_section"], false);
    assert_eq!(r["w0_ok"], Value::Null);
    assert_eq!(r["psi_generators"][0], "(1,-1)(2,3,4)(-2,-3,-4)");
}

#[test]
fn analyze_text_uses_cycle_notation() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "sol-b.json", &write_solution(&catalog::sol_b()));
    let out = itype(&["analyze", f.to_str().unwrap(), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("psi_2 = (2,-4,-3,-2,4,3)"), "{text}");
    assert!(text.contains("order: 48 = 2^4 * 3"), "{text}");
}

#[test]
fn simples_sol_a() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "sol-a.json", &write_solution(&catalog::sol_a()));
    let out = itype(&["simples", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["count"], 16);
    assert_eq!(r["length_counts"], serde_json::json!([1, 4, 6, 4, 1]));
}

#[test]
fn group_sol_a() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "sol-a.json", &write_solution(&catalog::sol_a()));
    let r = json(&itype(&["group", f.to_str().unwrap()]));
    assert_eq!(r["order"], 16);
    assert_eq!(r["exponent"], 8);
    assert_eq!(r["nilpotency_class"], 3);
}

#[test]
fn enumerate_writes_census_and_index() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("d");
    let out = itype(&["enumerate", "--n", "2", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let index: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("index.json")).unwrap())
            .unwrap();
    assert_eq!(index["count"], 2);
    for entry in index["solutions"].as_array().unwrap() {
        let text = std::fs::read_to_string(out_dir.join(entry["file"].as_str().unwrap())).unwrap();
        assert_eq!(
            entry["sha256"],
            hex::encode(Sha256::digest(text.as_bytes()))
        );
        assert_eq!(entry["property_c"], true);
        assert_eq!(entry["order"], 4);
    }
    let check = itype(&["check", out_dir.to_str().unwrap()]);
    assert_eq!(
        check.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&check.stdout)
    );
    assert_eq!(json(&check)["checked"], 2);
}

#[test]
fn raw_census_size() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("d");
    itype(&[
        "enumerate",
        "--n",
        "3",
        "--raw",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    let files = std::fs::read_dir(&out_dir).unwrap().count();
    assert_eq!(files, 12 + 1);
}

#[test]
fn round_trip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("d");
    itype(&["enumerate", "--n", "3", "--out", out_dir.to_str().unwrap()]);
    for e in std::fs::read_dir(&out_dir).unwrap() {
        let p = e.unwrap().path();
        if p.file_name().unwrap() == "index.json" {
            continue;
        }
        let text = std::fs::read_to_string(&p).unwrap();
        let sol = itype::io::parse_solution(&text).unwrap();
        assert_eq!(write_solution(&sol), text);
    }
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let dup = write(
        dir.path(),
        "dup.json",
        r#"{"n": 2, "g": [[1, 2], [2, 2]], "f": [[1, 2], [1, 2]]}"#,
    );
    let out = itype(&["validate", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("g[2]"));

    let junk = write(dir.path(), "junk.json", "{ not json");
    assert_eq!(
        itype(&["analyze", junk.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        itype(&["group", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn invalid_solution_exit_codes() {
    let dir = TempDir::new().unwrap();
    // g_1 = id, g_2 = (1 2) with f = id: not involutive
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"n": 2, "g": [[1, 2], [2, 1]], "f": [[1, 2], [1, 2]]}"#,
    );
    let out = itype(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["involutive"], false);
    let out = itype(&["validate", "--allow-invalid", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        itype(&["analyze", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        itype(&["check", bad.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn check_bounds_are_enforced() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "t.json", &write_solution(&catalog::trivial(2)));
    assert_eq!(
        itype(&["check", f.to_str().unwrap(), "--ball", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        itype(&["check", f.to_str().unwrap(), "--depth", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        itype(&["check", f.to_str().unwrap(), "--ball", "3"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn enumerate_rejects_large_n() {
    let dir = TempDir::new().unwrap();
    let out = itype(&[
        "enumerate",
        "--n",
        "5",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_keys_are_stable() {
    let dir = TempDir::new().unwrap();
    let keys = |sol: &itype::YbeSolution| -> Vec<String> {
        let f = write(dir.path(), "s.json", &write_solution(sol));
        let r = json(&itype(&["analyze", f.to_str().unwrap()]));
        r.as_object().unwrap().keys().cloned().collect()
    };
    let a = keys(&catalog::sol_a());
    assert_eq!(a, keys(&catalog::sol_b()));
    assert_eq!(a, keys(&catalog::trivial(1)));
}
