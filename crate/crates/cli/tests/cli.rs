//! End-to-end runs of the `kleshchev` binary.

use std::fs;
use std::process::{Command, Output};

fn kleshchev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kleshchev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn classify_emits_json_record() {
    let output = kleshchev(&[
        "classify",
        "--e",
        "3",
        "--charges",
        "2,1,0",
        "--tableaux-nmax",
        "8",
        "1|2,1|3,1",
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let text = String::from_utf8(output.stdout).unwrap();
    let record: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(record["multipartition"], "1|2,1|3,1");
    assert_eq!(record["kleshchev"], true);
    assert_eq!(record["strong_ladder"], true);
    assert_eq!(record["restricted_tableaux"], true);
    assert_eq!(record["restricted_fock"], true);
    // the strong-ladder schedule accounts for every node
    let total: u64 = record["schedule"]
        .as_array()
        .unwrap()
        .iter()
        .map(|pair| pair[1].as_u64().unwrap())
        .sum();
    assert_eq!(total, 8);

    // the size-8 diagram sits above the default tableau gate, so that field
    // is absent without the flag
    let gated = kleshchev(&["classify", "--e", "3", "--charges", "2,1,0", "1|2,1|3,1"]);
    assert_eq!(exit_code(&gated), 0);
    let gated: serde_json::Value =
        serde_json::from_slice(&gated.stdout).unwrap();
    assert!(gated.get("restricted_tableaux").is_none());
}

#[test]
fn classify_rejects_bad_modulus_and_encodings() {
    assert_eq!(exit_code(&kleshchev(&["classify", "--e", "1", "--charges", "0", "1"])), 2);
    assert_eq!(exit_code(&kleshchev(&["classify", "--e", "3", "--charges", "0", "1,2"])), 2);
    assert_eq!(
        exit_code(&kleshchev(&["classify", "--e", "3", "--charges", "0,1", "1"])),
        2
    );
    // clap usage errors share the invalid-input code
    assert_eq!(exit_code(&kleshchev(&["classify"])), 2);
}

#[test]
fn campaign_runs_and_writes_deterministic_report() {
    let dir = std::env::temp_dir().join("kleshchev-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let out_a = dir.join("report_a.json");
    let out_b = dir.join("report_b.json");
    for out in [&out_a, &out_b] {
        let output = kleshchev(&[
            "campaign",
            "--e",
            "2",
            "--charges",
            "0,1",
            "--nmax",
            "4",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&output), 0, "stderr: {}", String::from_utf8_lossy(&output.stderr));
    }
    let a = fs::read(&out_a).unwrap();
    let b = fs::read(&out_b).unwrap();
    assert_eq!(a, b, "reports must be byte-identical");
    let report: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["charges"][0]["levels"][0]["kleshchev"], 1);
}

#[test]
fn campaign_accepts_config_file() {
    let dir = std::env::temp_dir().join("kleshchev-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("sweep.cfg");
    fs::write(&cfg_path, "e = 3\nr = 2\ncharges = 2,1\nnmax = 3\nweyl = false\n").unwrap();
    let output = kleshchev(&["campaign", "--config", cfg_path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let report: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("JSON on stdout");
    assert_eq!(report["e"], 3);
    assert_eq!(report["weyl_check"], false);
}

#[test]
fn graph_output_is_deterministic_dot() {
    let run = || {
        let output = kleshchev(&["graph", "--e", "3", "--charges", "0", "--nmax", "2"]);
        assert_eq!(exit_code(&output), 0);
        String::from_utf8(output.stdout).unwrap()
    };
    let a = run();
    assert_eq!(a, run());
    assert!(a.starts_with("digraph good_lattice {"));
    assert!(a.contains("\"-\" -> \"1\" [label=\"0\"];"));
    assert!(a.contains("\"1\" -> \"1,1\" [label=\"2\"];"));
}

#[test]
fn hunt_prints_evidence_lines() {
    let output = kleshchev(&["hunt", "--e", "3", "--charges", "2,1,0", "--nmax", "3"]);
    assert_eq!(exit_code(&output), 0);
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("conjectured equalities hold"), "got: {text}");
}
