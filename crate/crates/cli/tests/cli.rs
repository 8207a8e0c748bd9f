use std::process::Command;

use serde_json::Value;
use typea_cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};

fn json(args: &[&str]) -> Value {
    let out = run(args.iter().copied());
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn series_of_sl2_3() {
    let v = json(&["series", "--n", "2", "--q", "3"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "series --n 2 --q 3");
    assert_eq!(v["results"]["total"], 7);
    let mut sizes: Vec<u64> = v["results"]["sizes"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 2, 2, 2]);
}

#[test]
fn gauss_constant_of_sl2_3_is_minus_i() {
    let v = json(&["gauss", "--n", "2", "--q", "3"]);
    let text = v.to_string();
    assert!(text.contains(r#"{"N":4,"coeffs":[[1,-1]]}"#), "{text}");
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["passed"] == true));
    let out = run(["--format", "text", "gauss", "--n", "2", "--q", "3"]);
    assert!(out.stdout.contains("-i"), "{}", out.stdout);
}

#[test]
fn raw_gauss_sum() {
    let v = json(&["gauss", "--raw", "--p", "3", "--s", "1", "--m", "1"]);
    // 1 + 2 zeta_3
    assert_eq!(v["results"]["value"], serde_json::json!({"N": 3, "coeffs": [[0, 1], [1, 2]]}));
}

#[test]
fn verify_passes_on_sl2_5() {
    let out = run(["verify", "--n", "2", "--q", "5"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["results"]["class_count"], 9);
    assert!(!v["verdicts"].as_array().unwrap().is_empty());
    assert_ne!(EXIT_VERIFY_FAILED, EXIT_OK);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(["series", "--n", "2"]).code, EXIT_USAGE);
    assert_eq!(run(["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(["series", "--n", "2", "--q", "6"]).code, EXIT_USAGE);
    let big = run(["verify", "--n", "3", "--q", "5"]);
    assert_eq!(big.code, EXIT_USAGE);
    assert!(big.stderr.contains("exceeds"), "{}", big.stderr);
    assert_eq!(run(["--help"]).code, EXIT_OK);
}

#[test]
fn output_is_byte_identical_with_and_without_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["verify", "--n", "2", "--q", "3"];
    let plain = run(args).stdout;
    let cold = run(["--cache", cache].into_iter().chain(args)).stdout;
    let warm = run(["--cache", cache].into_iter().chain(args)).stdout;
    assert_eq!(plain, run(args).stdout);
    assert_eq!(cold, warm);
    // the cache flag is echoed in `command`; everything else must match
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v["command"] = Value::Null;
        v
    };
    assert_eq!(strip(&plain), strip(&cold));
    assert!(dir.path().join("v1").join("sl_2-3.json").exists());
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_typea");
    let ok = Command::new(bin).args(["gauss", "--n", "2", "--q", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin).args(["gauss", "--n", "2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
