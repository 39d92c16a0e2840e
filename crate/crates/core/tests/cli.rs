//! Command-line behaviour: reports, exit codes and files written.

mod common;

use std::process::Command;

use common::{cli, fixture};
use serde_json::Value;

fn keys(v: &Value) -> Vec<String> {
    let mut k: Vec<String> = v.as_object().expect("object").keys().cloned().collect();
    k.sort();
    k
}

#[test]
fn reports_have_exactly_the_five_keys() {
    let (code, r) = cli(&["check", "monoid", &fixture("m2.nat:M")]);
    assert_eq!(code, 0);
    assert_eq!(keys(&r), ["command", "details", "elapsed_ms", "ok", "witnesses"]);
    assert_eq!(r["ok"], true);
    assert!(r["elapsed_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn z9_monoid_is_not_a_scalar_group() {
    let (code, r) = cli(&["check", "scalar-group", &fixture("z9.nat:M")]);
    assert_eq!(code, 1);
    assert_eq!(r["ok"], false);
    assert_eq!(r["witnesses"][0]["label"], "[3] non-invertible");
    assert_eq!(r["witnesses"][0]["elements"], serde_json::json!([3]));
}

#[test]
fn z9_product_fails_the_andre_test_with_a_witness() {
    let (code, r) = cli(&["check", "andre", &fixture("z9.nat:V"), &fixture("z9.nat:R")]);
    assert_eq!(code, 1);
    assert_eq!(r["witnesses"][0]["label"], "qk2-failure");
    assert_eq!(r["witnesses"][0]["elements"], serde_json::json!([10]));
    assert_eq!(r["details"]["qstar_size"], 45);
    let (code, _) = cli(&["check", "andre", &fixture("dickson.nat:J2"), &fixture("dickson.nat:J")]);
    assert_eq!(code, 0);
    let (code, _) = cli(&["check", "andre", &fixture("m3.nat:V3"), &fixture("m3.nat:F")]);
    assert_eq!(code, 0);
}

#[test]
fn nvs_and_fa_sa() {
    let (code, r) = cli(&["check", "nvs", &fixture("z9.nat:V")]);
    assert_eq!((code, r["details"]["reason"].as_str()), (1, Some("non-invertible element [3]")));
    assert_eq!(cli(&["check", "nvs", &fixture("dickson.nat:J2")]).0, 0);
    assert_eq!(cli(&["check", "fa-sa", &fixture("dickson.nat:J")]).0, 0);
    let (code, r) = cli(&["check", "fa-sa", &fixture("m2.nat:Z4")]);
    assert_eq!(code, 1);
    assert!(!r["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn enumeration_over_m3_finds_one_near_ring() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m3_all.nat");
    let (code, r) = cli(&["enumerate", "nearrings", &fixture("m3.nat:M"), "--emit", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["count"], 1);
    assert_eq!(r["details"]["complete"], true);
    let (code, r) = cli(&["check", "nearring", &format!("{}:N0", out.display())]);
    assert_eq!((code, r["details"]["order"].as_u64()), (0, Some(3)));
}

#[test]
fn enumeration_limits_and_orbits() {
    let m = fixture("dickson.nat:M");
    let (_, r) = cli(&["enumerate", "nearrings", &m, "--max", "1"]);
    assert_eq!((r["details"]["count"].as_u64(), r["details"]["complete"].as_bool()), (Some(1), Some(false)));
    let (_, r) = cli(&["enumerate", "nearrings", &m, "--dedup-auto"]);
    assert_eq!(r["details"]["orbits"].as_array().unwrap().len(), 1);
}

#[test]
fn module_operations() {
    let v3 = fixture("m3.nat:V3");
    let (_, r) = cli(&["submodules", &v3]);
    assert_eq!(r["details"]["count"], 28);
    let (_, r) = cli(&["quotient", &v3, "1"]);
    assert_eq!(r["details"]["order"], 9);
    let (_, r) = cli(&["quasikernel", &fixture("m2.nat:Z4")]);
    assert_eq!(r["details"]["quasi_kernel"], serde_json::json!([0, 2]));
    let (code, r) = cli(&["factorize", &fixture("m3.nat:P")]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["orders"], serde_json::json!({"dom": 9, "kernel": 3, "image": 3}));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.nat");
    let (code, r) = cli(&["product", &fixture("m3.nat:L"), &fixture("m3.nat:V2"), "--emit", out.to_str().unwrap()]);
    assert_eq!((code, r["details"]["order"].as_u64()), (0, Some(27)));
    assert_eq!(cli(&["check", "module", &format!("{}:P", out.display())]).0, 0);
}

#[test]
fn decompose_and_tfae() {
    let (code, r) = cli(&["decompose", &fixture("dickson.nat:J2"), "10"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["m_v"], 1);
    let (code, r) = cli(&["decompose", &fixture("z9.nat:V"), "10", "--over", &fixture("z9.nat:R")]);
    assert_eq!(code, 1);
    assert!(r["details"]["reason"].as_str().unwrap().contains("QK3"));
    assert_eq!(cli(&["decompose", &fixture("m3.nat:V2"), "99"]).0, 2);
    let (code, r) = cli(&["tfae", &fixture("dickson.nat:J2")]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["submodules_checked"], 6);
    assert_eq!(cli(&["tfae", &fixture("z9.nat:V")]).0, 1);
}

#[test]
fn verify_suites_report_refuted_claims() {
    let (code, r) = cli(&["verify", "lema", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["suite"], "lema");
    let (code, r) = cli(&["verify", "z9"]);
    assert_eq!(code, 1);
    assert_eq!(r["details"]["refuted"][0]["elements"], serde_json::json!([10]));
    let (code, r) = cli(&["verify", "all", &fixture("hash.nat")]);
    assert_eq!(code, 1);
    let suites = r["details"]["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 11);
    let failed: Vec<&str> = suites
        .iter()
        .filter(|s| s["passed"] == false)
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["z9", "closure"]);
    assert_eq!(cli(&["verify", "nope"]).0, 2);
}

#[test]
fn input_errors_exit_with_two() {
    let (code, r) = cli(&["check", "nvs", "missing.nat:X"]);
    assert_eq!(code, 2);
    assert_eq!(r["details"]["error"], "input");
    assert_eq!(cli(&["check", "module", &fixture("z9.nat:Nope")]).0, 2);
    assert_eq!(cli(&["check", "monoid", &fixture("z9.nat:V")]).0, 2);
    assert_eq!(nearalg::cli::run(["nearalg", "frobnicate"]).code, 2);
}

#[test]
fn invalid_tables_fail_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.nat");
    std::fs::write(&path, "@monoid B\norder 2\ntable:\n0 0\n1 1\n").unwrap();
    let (code, r) = cli(&["check", "monoid", &format!("{}:B", path.display())]);
    assert_eq!(code, 1);
    assert_eq!(r["witnesses"][0]["label"], "monoid");
    std::fs::write(&path, "@group G\norder 2\nadd:\n0 1\n0 1\n").unwrap();
    let (code, _) = cli(&["check", "group", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    std::fs::write(&path, "@group G\norder 2\nadd:\n0 x\n").unwrap();
    assert_eq!(cli(&["check", "group", path.to_str().unwrap()]).0, 2);
}

#[test]
fn catalog_scan_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (code, r) = cli(&["catalog", "scan", dir.path().to_str().unwrap()]);
    assert_eq!((code, r["details"]["rows"].as_u64()), (0, Some(0)));
    for entry in std::fs::read_dir(common::fixtures_dir()).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "nat") {
            std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
        }
    }
    let (_, r) = cli(&["catalog", "scan", dir.path().to_str().unwrap()]);
    // m2: 4 blocks, m3: 6, z9: 5, dickson: 4, q8: 1, hash: 2.
    assert_eq!(r["details"]["rows"], 22);
    let first = std::fs::read(dir.path().join("index.tsv")).unwrap();
    cli(&["catalog", "scan", dir.path().to_str().unwrap()]);
    assert_eq!(std::fs::read(dir.path().join("index.tsv")).unwrap(), first);
}

#[test]
fn binary_prints_text_and_sets_exit_codes() {
    let out = Command::new(env!("CARGO_BIN_EXE_nearalg"))
        .args(["--json", "false", "--threads", "2", "check", "scalar-group", &fixture("z9.nat:M")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check scalar-group: FAILED"), "{text}");
    let out = Command::new(env!("CARGO_BIN_EXE_nearalg")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
