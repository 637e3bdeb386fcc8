//! Command-line behaviour: golden reports, exit codes, determinism.

use std::path::PathBuf;
use std::process::Command;

use coxglue::cli::run_args;
use serde_json::Value;

fn fixture(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = run_args(std::iter::once("coxglue").chain(args.iter().copied()));
    (out.code, out.stdout, out.stderr)
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, stdout, stderr) = run(&full);
    assert!(stderr.is_empty(), "{stderr}");
    (code, serde_json::from_str(&stdout).expect("json report"))
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(fixture(&format!("golden/{name}"))).unwrap()
}

#[test]
fn counterexample_json_fields() {
    let (code, v) = run_json(&["counterexample", "--type", "A2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "unsolvable");
    assert_eq!(v["det_mod_phi6"], "0");
    assert_eq!(v["p_mod_phi6"], "4-2u");
    assert_eq!(v["poincare"], "1+2u+2u^2+u^3");
    assert_eq!(v["signed_poincare"], "1-2u+2u^2-u^3");
}

#[test]
fn golden_reports_are_byte_identical() {
    let br2 = fixture("reps/br2.json");
    let cases: [(&[&str], &str); 4] = [
        (&["counterexample", "--type", "A2"], "counterexample_A2.json"),
        (&["coxeter", "info", "--type", "B2"], "coxeter_info_B2.json"),
        (&["glue", "k0", "--builtin", "two-site"], "glue_k0_two_site.json"),
        (&["rep", "goodness", "--file", &br2], "rep_goodness_br2.json"),
    ];
    for (args, name) in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let (code, stdout, _) = run(&full);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(stdout, golden(name), "{args:?}");
    }
}

#[test]
fn same_seed_same_report() {
    let args = ["glue", "simples", "--builtin", "bounce-A2", "--seed", "17", "--format", "json"];
    assert_eq!(run(&args), run(&args));
    let fuzz = ["homlem-fuzz", "--count", "30", "--seed", "5", "--format", "json"];
    assert_eq!(run(&fuzz), run(&fuzz));
}

#[test]
fn convexity_and_sizig3() {
    let (code, v) = run_json(&["coxeter", "convexity", "--type", "A3"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"]["P_1 convex"], true);
    let (code, v) = run_json(&["coxeter", "sizig3", "--matrix", "1,4;4,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["missing"], serde_json::json!([]));
}

#[test]
fn rep_goodness_from_file() {
    let (code, v) = run_json(&["rep", "goodness", "--file", &fixture("reps/br2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["good"], true);
    assert_eq!(v["dim_V"], 1);
    assert_eq!(v["dim_KW"], 2);
    assert_eq!(v["checks"]["euler"], true);
}

#[test]
fn rep_subcommands_on_fixtures() {
    for f in ["reps/a2_cubic.json", "reps/b2_cubic.json"] {
        let path = fixture(f);
        for cmd in ["validate", "goodness", "euler", "half", "chi"] {
            let (code, v) = run_json(&["rep", cmd, "--file", &path]);
            assert_eq!(code, 0, "{cmd} {f}: {v}");
        }
    }
    let (code, v) = run_json(&[
        "rep",
        "goodness",
        "--file",
        &fixture("reps/a2_generic.json"),
        "--specialize",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["specialized"]["good"], true);
}

#[test]
fn builtin_reps_and_prime_field() {
    let (code, v) = run_json(&["rep", "goodness", "--type", "B2", "--builtin", "hecke", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim_V"], 8);
    let (code, v) = run_json(&[
        "rep", "goodness", "--type", "A2", "--builtin", "hecke", "--q", "2", "--field", "prime:101",
    ]);
    assert_eq!(code, 0);
    assert!(v["note"].as_str().unwrap().contains("prime field"));
}

#[test]
fn induce_records_an_input_file() {
    let (code, v) = run_json(&["rep", "induce", "--type", "A2", "--subset", "1", "--builtin", "scalar", "--q", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim_out"], 3);
    // The induced representation is itself a valid input file.
    let dir = std::env::temp_dir().join(format!("coxglue-induce-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("induced.json");
    std::fs::write(&path, v["induced"].to_string()).unwrap();
    let (code, back) = run_json(&["rep", "validate", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{back}");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn glue_datum_file_and_supports() {
    let (code, v) = run_json(&["glue", "k0", "--file", &fixture("data/triangular.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"]["classes of simples span K(Φ)"], true);
    let (code, v) = run_json(&["glue", "supports", "--builtin", "bounce-A2"]);
    assert_eq!(code, 0);
    assert_eq!(v["simples"].as_array().unwrap().len(), 2);
    let (code, _) = run_json(&["glue", "assemble", "--builtin", "full-A2"]);
    assert_eq!(code, 0);
}

#[test]
fn failed_checks_exit_one() {
    let (code, v) = run_json(&["rep", "validate", "--file", &fixture("reps/a2_broken.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["checks"]["braid relation s1 s2 (m=3)"], false);
    let (code, v) = run_json(&["glue", "assemble", "--builtin", "nonassociative"]);
    assert_eq!(code, 1);
    assert_eq!(v["ok"], false);
}

#[test]
fn input_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["coxeter", "info"],
        &["coxeter", "info", "--type", "Z9"],
        &["rep", "goodness", "--file", "/definitely/missing.json"],
        &["rep", "goodness", "--type", "A2", "--builtin", "hecke"],
        &["rep", "goodness", "--type", "A2", "--builtin", "scalar", "--q", "2", "--field", "prime:100"],
        &["glue", "k0", "--builtin", "no-such-datum"],
        &["no-such-command"],
    ];
    for args in cases {
        let (code, stdout, stderr) = run(args);
        assert_eq!(code, 2, "{args:?}: {stdout}{stderr}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn malformed_rep_file_names_the_entry() {
    let dir = std::env::temp_dir().join(format!("coxglue-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"system":{"type":"A","rank":1},"generators":[[["1/0"]]]}"#).unwrap();
    let (code, _, stderr) = run(&["rep", "goodness", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("generator 1, entry (1, 1)"), "{stderr}");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_coxglue");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["counterexample", "--type", "A2", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["verdict"], "unsolvable");
    assert_eq!(status(&["glue", "assemble", "--builtin", "nonassociative"]).status.code(), Some(1));
    assert_eq!(status(&["coxeter", "info", "--type", "Q5"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
