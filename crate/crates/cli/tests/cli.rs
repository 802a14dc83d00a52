use std::process::Command;

use serde_json::Value;
use shiftdiff_cli::document::{parse_decimal, recheck_containment};

fn shiftdiff(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_shiftdiff"))
        .args(args)
        .env_remove("SHIFTDIFF_PRECISION")
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let doc = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), doc, String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn exact_values() {
    let (code, doc, _) = shiftdiff(&["exact", "14"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["p"], "135");
    let (_, doc, _) = shiftdiff(&["exact", "0"]);
    assert_eq!(doc["result"]["p"], "1");
    let (code, doc, _) = shiftdiff(&["exact", "60", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["agreement"], true);
    assert_eq!(doc["result"]["p"], "966467");
}

#[test]
fn ratio_command() {
    let (code, doc, _) = shiftdiff(&["ratio", "14", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["exact"], "101/135");
    assert_eq!(doc["result"]["contained"], true);
    assert_eq!(doc["digits"], 39);

    let (code, doc, _) = shiftdiff(&["ratio", "100", "0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["exact"], "1");
    assert_eq!(doc["result"]["contained"], true);
}

#[test]
fn precondition_is_usage_error() {
    let (code, doc, err) = shiftdiff(&["ratio", "13", "1"]);
    assert_eq!(code, 2);
    assert!(doc.is_null());
    assert!(err.contains("requires n ≥ 14"), "{err}");
    let (code, _, err) = shiftdiff(&["ratio", "100", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("j < √N/2"), "{err}");
    let (code, _, _) = shiftdiff(&["verify", "everything"]);
    assert_eq!(code, 2);
    let (code, _, _) = shiftdiff(&["exact"]);
    assert_eq!(code, 2);
}

#[test]
fn fjn_krank_nonkary() {
    let (code, doc, _) = shiftdiff(&["fjn", "2000", "10"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["contained"], true);

    let (code, doc, _) = shiftdiff(&["nonkary", "5", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["nu"], "2");

    let (code, doc, _) = shiftdiff(&["krank", "--k", "2", "--m", "40", "--n", "70"]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["result"]["contained"], true);
}

#[test]
fn precision_flag_and_env() {
    let (_, doc, _) = shiftdiff(&["ratio", "50", "2", "--precision", "256"]);
    assert_eq!(doc["precision"], 256);
    assert_eq!(doc["digits"], 78);
    let out = Command::new(env!("CARGO_BIN_EXE_shiftdiff"))
        .args(["ratio", "50", "2"])
        .env("SHIFTDIFF_PRECISION", "96")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["precision"], 96);
}

#[test]
fn outputs_round_trip() {
    let cases: [&[&str]; 4] = [
        &["ratio", "14", "1"],
        &["ratio", "777", "6"],
        &["fjn", "500", "3"],
        &["nonkary", "300", "4"],
    ];
    for args in cases {
        let (_, doc, _) = shiftdiff(args);
        let r = &doc["result"];
        let interval = if r["enclosure"].is_object() { &r["enclosure"] } else { &r["ratio"]["enclosure"] };
        let exact = if r["exact"].is_string() { &r["exact"] } else { &r["ratio"]["exact"] };
        let again = recheck_containment(interval, exact.as_str().unwrap()).unwrap();
        assert_eq!(Value::Bool(again), interval["contained"], "{args:?}");
    }
    let (_, doc, _) = shiftdiff(&["krank", "--k", "1", "--m", "60", "--n", "100"]);
    for part in ["ratio", "difference"] {
        let p = &doc["result"][part];
        let again = recheck_containment(&p["enclosure"], p["exact"].as_str().unwrap()).unwrap();
        assert_eq!(Value::Bool(again), p["enclosure"]["contained"]);
    }
}

#[test]
fn verify_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("r.json");
    let csv_path = dir.path().join("r.csv");
    let (code, doc, _) = shiftdiff(&[
        "verify",
        "containment-ratio",
        "--n-max",
        "200",
        "--json",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["pass"], true);
    let on_disk: Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(on_disk["result"], doc["result"]);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("suite,label,passed,margin\n"));
    // n = 14..=200 with j < √N/2
    let rows = csv.lines().count() - 1;
    assert_eq!(rows as u64, doc["result"]["reports"][0]["cases"].as_u64().unwrap());
    let margin = csv.lines().nth(1).unwrap().rsplit(',').next().unwrap();
    assert!(margin.parse::<f64>().unwrap() > 0.0);
}

#[test]
fn verify_failure_exits_one() {
    // the injection sweep includes the degenerate point n = j = l = 1
    let (code, doc, _) = shiftdiff(&["verify", "nonkary", "--n-max", "40", "--j-max", "2"]);
    assert_eq!(code, 1);
    let reports = doc["result"]["reports"].as_array().unwrap();
    let injection = reports.iter().find(|r| r["suite"] == "injection-inequality").unwrap();
    assert_eq!(injection["failures"][0]["label"], "n=00001,j=01,l=01");
}

#[test]
fn single_inequality_case() {
    let (code, doc, _) = shiftdiff(&["verify", "inequalities", "--case", "sqrt-gap", "--seed", "7"]);
    assert_eq!(code, 0);
    let reports = doc["result"]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["suite"], "inequality:sqrt-gap");
    let (code, _, err) = shiftdiff(&["verify", "inequalities", "--case", "no-such-case"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown inequality case"));
}

#[test]
fn golden_ratio_sample() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/sample-ratio-14-1.json");
    let mut frozen: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let (_, mut fresh, _) = shiftdiff(&["ratio", "14", "1"]);
    // timing is the only field allowed to move
    frozen["elapsed_ms"] = Value::Null;
    fresh["elapsed_ms"] = Value::Null;
    assert_eq!(fresh, frozen);
}

#[test]
fn endpoints_parse_back_exactly() {
    let (_, doc, _) = shiftdiff(&["ratio", "14", "1"]);
    let f = &doc["result"]["factors"]["exponential"];
    let lo = parse_decimal(f["lo"].as_str().unwrap()).unwrap();
    let hi = parse_decimal(f["hi"].as_str().unwrap()).unwrap();
    assert!(lo < hi);
    assert_eq!(f["lo"].as_str().unwrap().len(), "7.".len() + 38 + "e-1".len());
}
