use serde_json::Value;

use quotient_power_web::{analyze, kofn, truth_table};

const SCOTTISH: &str = r#"{
    "voters": ["SNP", "Labour", "Conservative", "LibDem", "Green"],
    "rows": [{"quota": 65, "weights": [47, 46, 17, 16, 2]}],
    "forbidden": [["SNP", "Labour"]]
}"#;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn analyze_restricted_scottish() {
    let v = parse(analyze(SCOTTISH));
    let tbp: Vec<u64> = v["voters"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["tbp"].as_u64().unwrap())
        .collect();
    assert_eq!(tbp, [4, 3, 5, 3, 3]);
    assert_eq!(v["restricted"], true);
}

#[test]
fn analyze_reports_errors() {
    let v = parse(analyze("{\"voters\": [\"A\"]}"));
    assert!(v["error"].as_str().unwrap().contains("rows"));
}

#[test]
fn kofn_five_of_eight() {
    let v = parse(kofn(8, 5));
    assert_eq!(v["ok"], true);
    let computed: Vec<u64> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["computed"].as_u64().unwrap())
        .collect();
    assert_eq!(computed, [35, 35, 35, 15, 15, 25, 25]);
    assert!(parse(kofn(3, 4))["error"].is_string());
}

#[test]
fn truth_table_two_of_three() {
    let text = r#"{"voters": ["A", "B", "C"], "rows": [{"quota": 2, "weights": [1, 1, 1]}], "forbidden": [["A", "B"]]}"#;
    let v = parse(truth_table(text));
    assert_eq!(v["f"], "00010111");
    assert_eq!(v["g"], "00000110");
    assert_eq!(v["g_polarity"][0], "biform");
}
