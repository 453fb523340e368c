use serde_json::Value;
use subexc_cli::run;

fn call(args: &[&str]) -> (i32, String) {
    run(std::iter::once("subexc").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    let (code, out) = call(&v);
    assert_eq!(code, 0, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn bott_c3_example() {
    let v = json(&["bott", "--diagram", "C3", "--weight", "3,0,-3"]);
    assert_eq!(v["result"]["degree"], 3);
    assert_eq!(v["result"]["weight"], serde_json::json!([0, 0, 0]));
    let (_, text) = call(&["bott", "--diagram", "C3", "--weight", "3,0,-3", "--trace"]);
    assert!(text.contains("s3 -> (4,-3,2)"), "{text}");
}

#[test]
fn singular_d6_weight() {
    let (code, text) = call(&["bott", "--diagram", "D6", "--weight", "-9,0,0,0,0,0"]);
    assert_eq!(code, 0);
    assert!(text.contains("singular"));
}

#[test]
fn character_rows() {
    let v = json(&["char", "--case", "1", "--module", "L2", "--dmin", "-9", "--dmax", "-7"]);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["weight"] == serde_json::json!([1, 0, 0]) && r["degree"] == -7 && r["mult"] == 1));
    assert!(rows.iter().all(|r| (-9..=-7).contains(&r["degree"].as_i64().unwrap())));
}

#[test]
fn hilbert_counts_polynomials() {
    let (code, text) = call(&["hilbert", "--case", "1", "--d", "2"]);
    assert_eq!((code, text.trim()), (0, "dim [S]_2 = 105"));
}

#[test]
fn poincare_reports_erratum_for_d6() {
    let v = json(&["poincare", "--case", "4"]);
    assert_eq!(v["middle_exponent"], 10);
    assert!(v["erratum"].is_string());
}

#[test]
fn regularity_from_root() {
    let (code, text) = call(&["reg", "--root", "-5/2", "--deg-f", "4", "--codim", "3"]);
    assert_eq!(code, 0);
    assert!(text.ends_with("= 7\n"), "{text}");
}

#[test]
fn quiver_dot_output() {
    let (code, text) = call(&["quiver", "--case", "2", "--dot"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("digraph"));
}

#[test]
fn config_file_supplies_case() {
    let dir = std::env::temp_dir().join(format!("subexc-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "case = 2\nformat = json\n").unwrap();
    let (code, out) = call(&["--config", path.to_str().unwrap(), "bfunction"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["case"], 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(call(&["bogus"]).0, 2);
    assert_eq!(call(&["char", "--case", "3", "--module", "S"]).0, 2);
    assert_eq!(call(&["char", "--case", "1", "--module", "Nope"]).0, 2);
    assert_eq!(call(&["bott", "--diagram", "C3", "--weight", "1,2"]).0, 2);
    assert_eq!(call(&["poincare"]).0, 2);
    assert_eq!(call(&["verify", "--case", "1", "--dmin", "3", "--dmax", "1"]).0, 2);
}

#[test]
fn verify_passes_small_box() {
    let (code, out) = call(&["verify", "--case", "2", "--dmin", "-6", "--dmax", "2", "--bound", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}
