use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(rel: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(rel);
    p.to_string_lossy().into_owned()
}

fn hgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgp"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    })
}

fn params_of(seed: &str) -> (u64, u64, u64, u64) {
    let out = hgp(&[
        "params",
        "--seed",
        &fixture(seed),
        "--symmetric-square",
        "--distance",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schemaVersion"], 1);
    let p = &v["params"];
    (
        p["n"].as_u64().unwrap(),
        p["k"].as_u64().unwrap(),
        p["d"].as_u64().unwrap(),
        p["maxStabWeight"].as_u64().unwrap(),
    )
}

#[test]
fn params_of_table_seeds() {
    assert_eq!(params_of("seed_table/row1.txt"), (98, 32, 3, 8));
    assert_eq!(params_of("seed_table/row2.txt"), (242, 98, 3, 12));
    assert_eq!(params_of("seed_table/row9.txt"), (722, 32, 9, 16));
}

#[test]
fn params_without_distance() {
    let out = hgp(&["params", "--seed", &fixture("seeds/h_rep.txt")]);
    let v = json(&out);
    assert_eq!(v["params"]["n"], 13);
    assert!(v["params"].get("d").is_none() || v["params"]["d"].is_null());
}

#[test]
fn table_reproduces() {
    let out = hgp(&["table", "--dir", &fixture("seed_table")]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["report"]["matched"], 9);
    assert_eq!(v["passed"], true);
}

#[test]
fn table_mismatch_and_empty_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = hgp(&["table", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    for entry in fs::read_dir(fixture("seed_table")).unwrap() {
        let p = entry.unwrap().path();
        fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let row = dir.path().join("row6.txt");
    let text = fs::read_to_string(&row).unwrap();
    let flipped = text.replacen("1 1 0 1", "1 1 0 0", 1);
    assert_ne!(flipped, text);
    fs::write(&row, flipped).unwrap();
    let out = hgp(&["table", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("row6"));
    assert_eq!(json(&out)["report"]["matched"], 8);
}

#[test]
fn verify_gates() {
    let tilde = fixture("seeds/h_tilde.txt");
    for gate in ["czs", "hswap"] {
        let out = hgp(&["verify-gate", "--seed", &tilde, "--gate", gate]);
        assert!(out.status.success(), "{gate}");
        assert_eq!(json(&out)["passed"], true);
    }
    let hamming = fixture("seeds/hamming.txt");
    let out = hgp(&[
        "verify-gate",
        "--seed",
        &hamming,
        "--symmetric-square",
        "--gate",
        "siblingcz",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().contains("phase"));
    let out = hgp(&[
        "verify-gate",
        "--seed",
        &hamming,
        "--symmetric-square",
        "--gate",
        "siblingcz",
        "--pauli-frame",
    ]);
    assert!(out.status.success());
    assert!(json(&out)["pauliFrame"].is_string());
    let out = hgp(&[
        "verify-gate",
        "--seed",
        &hamming,
        "--symmetric-square",
        "--gate",
        "hswap-sibling",
    ]);
    assert!(out.status.success());
    let out = hgp(&["verify-gate", "--seed", &tilde, "--gate", "siblingcz"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn basis_of_guide_code() {
    let out = hgp(&["basis", "--seed", &fixture("seeds/h_tilde.txt")]);
    assert!(out.status.success());
    let v = json(&out);
    let qubits = v["logicalQubits"].as_array().unwrap();
    assert_eq!(qubits.len(), 17);
    assert_eq!(v["seedPivots"]["a"], serde_json::json!([3, 5, 6, 7]));
    assert_eq!(v["seedPivots"]["aBar"], serde_json::json!([4]));
    assert_eq!(qubits[0]["id"], "L:3,3");
    assert_eq!(qubits[16]["id"], "R:4,4");
}

#[test]
fn schedules() {
    let tilde = fixture("seeds/h_tilde.txt");
    let base = ["schedule", "--seed", tilde.as_str(), "--symmetric-square"];
    let run = |extra: &[&str]| hgp(&[&base[..], extra].concat());
    let out = run(&["--gate", "cz", "--qubits", "L:3,3", "R:6,5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["steps"].as_array().unwrap().len(), 4);
    assert_eq!(v["verified"], true);
    assert_eq!(v["timeCostTau"], 4);
    assert_eq!(v["stepsSectorTransversal"], true);

    let out = run(&["--gate", "cnot", "--qubits", "L:3,3", "L:5,3"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["legs"].as_array().unwrap().len(), 4);

    let out = run(&["--gate", "xcx", "--qubits", "R:6,5", "L:3,3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["--gate", "inject", "--qubits", "L:3,3", "--gadget", "t"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["gadget"]["ancillaState"], "H|T>");
    assert_eq!(v["gadget"]["clifford"], false);

    let rep = fixture("seeds/h_rep.txt");
    let out = run(&[
        "--gate",
        "inject",
        "--qubits",
        "R:6,5",
        "--ancilla-seed",
        &rep,
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["verified"], true);

    let out = run(&[
        "--gate", "cz", "--qubits", "L:3,3", "R:6,5", "--render", "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("t = ").count(), 4);
}

#[test]
fn partitions() {
    let toric = fixture("seeds/h_toric.txt");
    let out = hgp(&[
        "partition",
        "--seed",
        &toric,
        "--kind",
        "sibling",
        "--max-subsets",
        "4",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(
        v["partitionDistance"],
        serde_json::json!({"value": 3, "exact": true})
    );
    assert_eq!(v["sectorTransversal"], true);
    let out = hgp(&[
        "partition",
        "--seed",
        &fixture("seeds/h_rep.txt"),
        "--kind",
        "twin",
    ]);
    let v = json(&out);
    assert_eq!(v["locality"], 2);
    assert!(v["partitionDistance"]["value"].as_u64().unwrap() >= 2);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let tilde = fixture("seeds/h_tilde.txt");
    let a = hgp(&["basis", "--seed", &tilde]).stdout;
    let b = hgp(&["basis", "--seed", &tilde]).stdout;
    assert_eq!(a, b);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let out = hgp(&["basis", "--seed", &tilde, "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), a);
}

#[test]
fn bad_matrix_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "2 3\n1 0 1\n1 2 0\n").unwrap();
    let out = hgp(&["params", "--seed", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
