//! End-to-end pipelines through the binary: generate, weight, check.

use std::fs;
use std::process::Command;

fn run(args: &[&str]) -> (String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperweight"))
        .args(args)
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code())
}

#[test]
fn gen_weight_check_round_trip() {
    let dir = std::env::temp_dir().join(format!("hyperweight-pipeline-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let hg = dir.join("h.hg").display().to_string();
    let wt = dir.join("h.wt").display().to_string();

    // a seed known to succeed for the 3-uniform weighter at n = 48
    let (_, code) = run(&["gen", "--n", "48", "--r", "3", "--p", "0.5", "--seed", "3", "--out", &hg]);
    assert_eq!(code, Some(0));
    let (_, code) = run(&["weight", "--input", &hg, "--algorithm", "auto", "--seed", "4", "--out", &wt]);
    assert_eq!(code, Some(0));
    let (stdout, code) = run(&["check", "--input", &hg, "--weights", &wt, "--mode", "strong"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("\"ok\":true"), "check output: {stdout}");
    // the diagnostics sidecar is written next to the weights
    assert!(dir.join("h.json").exists());

    // solving the same instance at the found bound also writes a weighting
    // that re-checks
    let wt2 = dir.join("s.wt").display().to_string();
    let (_, code) = run(&["solve", "--input", &hg, "--w", "2", "--mode", "weak", "--out", &wt2]);
    assert_eq!(code, Some(0));
    let (stdout, code) = run(&["check", "--input", &hg, "--weights", &wt2, "--mode", "weak"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("\"ok\":true"));

    fs::remove_dir_all(&dir).ok();
}

#[test]
fn reduce_then_solve_negative() {
    let dir = std::env::temp_dir().join(format!("hyperweight-pipeline-k3-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let k3 = dir.join("k3.hg");
    fs::write(&k3, "3 2 3\n0 1\n0 2\n1 2\n").unwrap();
    let k3 = k3.display().to_string();
    let target = dir.join("h.hg").display().to_string();
    let sidecar = dir.join("map.json").display().to_string();

    let (_, code) = run(&["reduce", "--input", &k3, "--r", "3", "--out", &target, "--sidecar", &sidecar]);
    assert_eq!(code, Some(0));
    let map: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(map["derived"].as_array().unwrap().len(), 3);

    let (stdout, code) = run(&["solve", "--input", &target, "--w", "2", "--mode", "strong"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("\"status\":\"unsat\""), "solve output: {stdout}");

    fs::remove_dir_all(&dir).ok();
}
