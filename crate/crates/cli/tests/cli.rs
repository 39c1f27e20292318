use std::io::Write;
use std::process::{Command, Output};

use cyclorep::ansearch::{BoundReport, SparseSignature};
use cyclorep::matrixrep::SubfieldRepresentation;
use cyclorep::polyring::{CyclotomicProfile, IntPolynomial, RatPolynomial};
use serde_json::Value;

fn cyclo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = cyclo(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn search_an_6_is_exact() {
    let v = json(&["search-an", "6"]);
    assert_eq!(v["command"], "search-an");
    assert_eq!(v["result"]["exact"], serde_json::json!({"degree": 5, "inner": [4]}));
    let s: SparseSignature = serde_json::from_value(v["result"]["exact"].clone()).unwrap();
    assert!(s.is_member(6));
}

#[test]
fn search_an_prime_power_is_empty() {
    let v = json(&["search-an", "27", "--strategy", "meet_in_middle"]);
    assert_eq!(v["result"]["empty"], true);
    assert_eq!(v["result"]["exact"], Value::Null);
}

#[test]
fn cayley_7_3() {
    let v = json(&["cayley", "7", "3"]);
    assert_eq!(v["result"]["connection"], serde_json::json!([1, 2, 4]));
    let rep: SubfieldRepresentation = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(rep.minimal_polynomial, RatPolynomial::from_i64s(&[-6, -1, -2, 1]));
    assert_eq!(rep.hoffman.degree(), Some(2));
    assert_eq!(v["result"]["display"]["minimal_polynomial"], "x^3 - 2*x^2 - x - 6");
}

#[test]
fn cayley_dot_lists_arcs() {
    let out = cyclo(&["cayley", "7", "3", "--dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 21);
}

#[test]
fn reports_round_trip() {
    let p: CyclotomicProfile = serde_json::from_value(json(&["profile", "105"])["result"].clone()).unwrap();
    assert_eq!(p.totient, 48);
    assert!(!p.flat);
    let b: BoundReport = serde_json::from_value(json(&["bounds", "30"])["result"].clone()).unwrap();
    assert!(b.is_consistent());
    let c = json(&["cyclotomic", "6"]);
    let phi: IntPolynomial = serde_json::from_value(c["result"]["coefficients"].clone()).unwrap();
    assert_eq!(phi, IntPolynomial::from_i64s(&[1, -1, 1]));
    assert_eq!(json(&["smallest-order", "10"])["result"]["order"], 5);
    let sym = json(&["sym", "12"]);
    assert!(sym["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["bounds", "42"][..],
        &["cayley", "13", "4", "--json"],
        &["verify", "cayley"],
    ] {
        assert_eq!(cyclo(args).stdout, cyclo(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_all_up_to_36() {
    let out = cyclo(&["verify", "all", "--max-n", "36"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("0 failed\n"));
}

#[test]
fn hoffman_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let cycle = r#"{"rows":3,"cols":3,"entries":[["0","1"],["1","1"],["0","1"],["0","1"],["0","1"],["1","1"],["1","1"],["0","1"],["0","1"]]}"#;
    file.write_all(cycle.as_bytes()).unwrap();
    let v = json(&["hoffman", "--matrix", file.path().to_str().unwrap()]);
    let g: RatPolynomial = serde_json::from_value(v["result"]["hoffman"].clone()).unwrap();
    assert_eq!(g, RatPolynomial::from_i64s(&[1, 1, 1]));
}

#[test]
fn domain_errors_exit_1_with_kind() {
    let out = cyclo(&["cayley", "9", "2", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "NotPrime");
    assert_eq!(v["inputs"]["p"], 9);

    let out = cyclo(&["search-an", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ModulusTooSmall"));

    let out = cyclo(&["search-an", "94", "--budget", "1000", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "BudgetExhausted");

    let out = cyclo(&["verify", "nonsense", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "UnknownSuite");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["search-an"],
        &["search-an", "x"],
        &["cayley", "7", "3", "--dot", "--json"],
    ] {
        assert_eq!(cyclo(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(cyclo(&["search-an", "6", "--strategy", "guess"]).status.code(), Some(2));
}
