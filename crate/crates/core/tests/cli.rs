use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dtcodes"))
        .args(args)
        .env_remove("DTCODES_WORKERS")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn status(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn code_minimum_weights() {
    assert_eq!(stdout(&["code", "--q", "3", "--nc", "(1,2,1,1,1,0)", "--minwt"]).trim(), "6");
    assert_eq!(stdout(&["code", "--q", "2", "--dc", "(0)", "--minwt"]).trim(), "1");
    assert_eq!(stdout(&["code", "--q", "4", "--dc", "(1,w)", "--minwt"]).trim(), "3");
    assert_eq!(stdout(&["code", "--q", "3", "--dt", "1;(1,0);(2,1)", "--minwt"]).trim(), "3");
}

#[test]
fn code_other_actions() {
    let we: Vec<String> = serde_json::from_str(&stdout(&["code", "--q", "2", "--dc", "(1,1,0)", "--wenum"])).unwrap();
    assert_eq!(we, ["1", "0", "0", "4", "3", "0", "0"]);
    assert_eq!(stdout(&["code", "--q", "4", "--dt", "0;(1,1,1);(1,w,1)", "--fsd"]).trim(), "true");
    let dual: Value = serde_json::from_str(&stdout(&["code", "--q", "3", "--dc", "(1,2)", "--dual"])).unwrap();
    assert_eq!(dual["n"], 4);
    assert_eq!(dual["k"], 2);
    assert_eq!(dual["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_name_the_argument() {
    let out = run(&["code", "--q", "4", "--dc", "(1,x)", "--minwt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--dc"));
    assert_eq!(status(&["code", "--q", "5", "--dc", "(1)", "--minwt"]), 2);
    assert_eq!(status(&["code", "--q", "2", "--dc", "(1)"]), 2);
    assert_eq!(status(&["awe", "--q", "2", "--n", "7"]), 2);
    assert_eq!(status(&["verify-tables", "--suite", "everything"]), 2);
}

#[test]
fn budget_refusals_exit_3() {
    let row = format!("({})", vec!["1"; 28].join(","));
    assert_eq!(status(&["code", "--q", "2", "--dc", &row, "--minwt"]), 3);
    assert_eq!(status(&["awe", "--q", "2", "--n", "30", "--verify"]), 3);
    assert_eq!(status(&["search", "--q", "2", "--n", "40"]), 3);
}

#[test]
fn average_enumerator_and_thresholds() {
    let psi: Vec<String> = serde_json::from_str(&stdout(&["awe", "--q", "2", "--n", "2"])).unwrap();
    assert_eq!(psi, ["2", "1", "1"]);
    stdout(&["awe", "--q", "3", "--n", "6", "--verify"]);
    assert_eq!(stdout(&["awe", "--q", "2", "--threshold", "--d", "6"]).trim(), "40");
    assert_eq!(stdout(&["awe", "--q", "3", "--threshold", "--d", "28"]).trim(), "162");
    let table = stdout(&["awe", "--q", "4", "--table", "--dmin", "5", "--dmax", "10"]);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "d,n_4(d)");
    assert_eq!(&lines[1..], ["5,16", "6,22", "7,26", "8,32", "9,38", "10,42"]);
}

#[test]
fn search_streams_json_lines_that_round_trip() {
    let out = stdout(&["search", "--q", "2", "--n", "4", "--mode", "find-optimal"]);
    let recs: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!recs.is_empty());
    for r in &recs {
        assert_eq!(r["min_weight"], 2);
        let triple = format!("{};{};{}", r["t"].as_str().unwrap(), r["a"].as_str().unwrap(), r["b"].as_str().unwrap());
        assert_eq!(stdout(&["code", "--q", "2", "--dt", &triple, "--minwt"]).trim(), "2");
    }
    let circ = stdout(&["search", "--q", "4", "--n", "6", "--family", "dc", "--reduction", "none"]);
    assert!(circ.lines().any(|l| serde_json::from_str::<Value>(l).unwrap()["r"] == "(1,w,1)"));
    assert_eq!(status(&["search", "--q", "2", "--n", "4", "--mode", "collect-at"]), 2);
}

#[test]
fn search_output_is_deterministic() {
    let args = ["search", "--q", "3", "--n", "8", "--mode", "at-least", "--d", "4"];
    let a = stdout(&[&args[..], &["--workers", "1"]].concat());
    let b = stdout(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn search_checkpoint_flag() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let cp = cp.to_str().unwrap();
    let a = stdout(&["search", "--q", "2", "--n", "10", "--checkpoint", cp]);
    let b = stdout(&["search", "--q", "2", "--n", "10", "--checkpoint", cp]);
    assert_eq!(a, b);
    assert_eq!(status(&["search", "--q", "2", "--n", "10", "--reduction", "none", "--checkpoint", cp]), 2);
}

#[test]
fn classify_reports() {
    let r: Value = serde_json::from_str(&stdout(&["classify", "--q", "2", "--n", "12"])).unwrap();
    assert_eq!((r["d_opt"].as_u64(), r["n_dt"].as_u64(), r["n_dc"].as_u64()), (Some(4), Some(4), Some(4)));
    let r: Value = serde_json::from_str(&stdout(&["classify", "--q", "3", "--n", "8"])).unwrap();
    assert_eq!(
        (r["d_opt"].as_u64(), r["n_dt"].as_u64(), r["n_dc"].as_u64(), r["n_nc"].as_u64()),
        (Some(4), Some(0), Some(3), Some(0))
    );
    let lines = stdout(&["classify", "--q", "4", "--n", "8", "--jsonl"]);
    let recs: Vec<Value> = lines.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 13);
    assert_eq!(recs.iter().filter(|r| r["structure"] == "DT-only").count(), 7);
}

#[test]
fn verify_tables_suites() {
    let out = run(&["verify-tables", "--suite", "thresholds"]);
    assert!(out.status.success());
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary[0]["passed"], 138);
    assert_eq!(summary[0]["failed"], 0);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert_eq!(stderr.lines().filter(|l| l.contains("PASS")).count(), 138);
    stdout(&["verify-tables", "--suite", "awe-oracle"]);
}
