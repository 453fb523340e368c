use serde_json::Value;
use subexc_web::{bott_trace_json, character_table_json, poincare_json};

#[test]
fn trace_reaches_dominant_weight() {
    let v: Value = serde_json::from_str(&bott_trace_json("C3", "3,0,-3").unwrap()).unwrap();
    assert_eq!(v["trace"]["steps"].as_array().unwrap().len(), 3);
}

#[test]
fn character_rows_and_limits() {
    let v: Value = serde_json::from_str(&character_table_json(1, "S", 0, 2, 4).unwrap()).unwrap();
    assert!(!v["rows"].as_array().unwrap().is_empty());
    assert!(character_table_json(1, "S", 0, 100, 4).is_err());
    assert!(character_table_json(3, "S", 0, 2, 4).is_err());
}

#[test]
fn poincare_has_cells() {
    let v: Value = serde_json::from_str(&poincare_json(2).unwrap()).unwrap();
    assert_eq!(v["cells"], "20");
}
