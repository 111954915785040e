use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_srefl"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (
        out.status.code().unwrap(),
        value,
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn group_tables() {
    let (code, v, _) = run(&["group", "C4"]);
    assert_eq!(code, 0);
    let table = v["characters"].as_array().unwrap();
    assert_eq!(table.len(), 4);
    // χ_1(α) = i
    assert_eq!(table[1][1]["approx"], serde_json::json!([0.0, 1.0]));
    assert_eq!(v["classes"].as_array().unwrap().len(), 4);

    let (code, v, _) = run(&["group", "D2"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 8);
    assert_eq!(v["characters"].as_array().unwrap().len(), 5);
    let sizes: Vec<u64> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, vec![1, 2, 1, 2, 2]);

    let (code, v, err) = run(&["group", "C1"]);
    assert_eq!(code, 2);
    assert!(v.is_null());
    assert!(err.contains("Weyl algebra"));
    assert_eq!(run(&["group", "X7"]).0, 2);
}

#[test]
fn mckay_diagrams() {
    for (spec, want) in [("T", "E~6"), ("C5", "A~4"), ("D4", "D~6"), ("I", "E~8")] {
        let (code, v, _) = run(&["mckay", spec]);
        assert_eq!(code, 0);
        assert_eq!(v["graph"]["diagram"], want, "{spec}");
    }
}

#[test]
fn classify_counts() {
    for (spec, n, want) in [("C2", "2", 4), ("C2", "1", 2), ("C3", "2", 6)] {
        let (code, v, _) = run(&["classify", spec, "--n", n]);
        assert_eq!(code, 0);
        assert_eq!(
            v["families"].as_array().unwrap().len(),
            want,
            "{spec} N={n}"
        );
    }
    let (_, v, _) = run(&["classify", "C2", "--n", "1"]);
    let c: Vec<String> = v["families"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| {
            f["solution"]["particular"][1]["coeffs"][0]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(c, vec!["-1", "1"]);
    assert_eq!(run(&["classify", "C2", "--n", "0"]).0, 2);
}

#[test]
fn classify_is_deterministic() {
    let a = run(&["classify", "D3", "--n", "3"]).1;
    let b = run(&["classify", "D3", "--n", "3"]).1;
    assert_eq!(a, b);
}

#[test]
fn verify_agrees() {
    let (code, v, _) = run(&["verify", "C2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_agree"], true);
    assert_eq!(v["accepted"], 4);
    assert!(v["checked"].as_u64().unwrap() > 4);

    let (code, v, _) = run(&["verify", "D2", "--n", "2", "--mode", "exact"]);
    assert_eq!(code, 0);
    for r in v["reports"].as_array().unwrap() {
        if r["oracle_accepts"] == true {
            assert_eq!(r["residual_R1"], 0.0);
            assert_eq!(r["residual_R2"], 0.0);
        }
    }
}

#[test]
fn verify_filters_and_errors() {
    let (code, v, _) = run(&[
        "verify",
        "C2",
        "--n",
        "2",
        "--type",
        "1,1",
        "--partitions",
        r#"{"0":[1],"1":[1]}"#,
    ]);
    assert_eq!(code, 0);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["oracle"]["k_forced_zero"], true);

    assert_eq!(run(&["verify", "T", "--n", "2"]).0, 3);
    assert_eq!(run(&["verify", "C2", "--n", "2", "--type", "3"]).0, 2);
    assert_eq!(run(&["verify", "C2", "--n", "2", "--mode", "fuzzy"]).0, 2);
    assert_eq!(run(&["verify", "C2", "--n", "9"]).0, 2);
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("srefl-cli-test-{}.json", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_srefl"))
        .args(["mckay", "C3", "--pretty", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["graph"]["diagram"], "A~2");
    std::fs::remove_file(path).unwrap();
}
