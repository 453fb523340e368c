//! Browser bindings for the demo page in `www/`. Each export returns a JSON
//! string; errors become rejected `JsValue` strings.

use serde_json::json;
use wasm_bindgen::prelude::*;

use subexc_core::bott::bott_trace as trace;
use subexc_core::charseries::{expand_box, BoxSpec, DEFAULT_CELL_CAP};
use subexc_core::geometry::poincare_report;
use subexc_core::liealg::{DynkinDiagram, Weight};
use subexc_core::subexc::{case_data, simple_character, ModuleName};

/// Hard cap on the box so a page cannot freeze the tab.
const MAX_SPAN: i64 = 24;
const MAX_BOUND: u32 = 8;

fn to_js<T: ToString>(e: T) -> JsValue {
    JsValue::from_str(&e.to_string())
}

pub fn bott_trace_json(diagram: &str, weight: &str) -> Result<String, String> {
    let d = DynkinDiagram::named(diagram.trim()).map_err(|e| e.to_string())?;
    let w: Weight = weight.trim().parse().map_err(|e: subexc_core::Error| e.to_string())?;
    let t = trace(&d, &w).map_err(|e| e.to_string())?;
    Ok(json!({"diagram": d.name(), "trace": t}).to_string())
}

pub fn character_table_json(m: u32, module: &str, dmin: i64, dmax: i64, bound: u32) -> Result<String, String> {
    if dmax < dmin || dmax - dmin > MAX_SPAN || bound == 0 || bound > MAX_BOUND {
        return Err(format!("keep dmax - dmin within 0..={MAX_SPAN} and bound within 1..={MAX_BOUND}"));
    }
    let case = case_data(m).map_err(|e| e.to_string())?;
    let name: ModuleName = module.trim().parse().map_err(|e: subexc_core::Error| e.to_string())?;
    let ch = simple_character(&case, name).map_err(|e| e.to_string())?;
    let series = expand_box(&ch, BoxSpec::new(dmin, dmax, bound), DEFAULT_CELL_CAP).map_err(|e| e.to_string())?;
    Ok(json!({"m": m, "module": name, "diagram": case.diagram.name(), "rows": series.rows()}).to_string())
}

pub fn poincare_json(m: u32) -> Result<String, String> {
    let r = poincare_report(m).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&r).expect("report serializes"))
}

#[wasm_bindgen]
pub fn bott_trace(diagram: &str, weight: &str) -> Result<String, JsValue> {
    bott_trace_json(diagram, weight).map_err(to_js)
}

#[wasm_bindgen]
pub fn character_table(m: u32, module: &str, dmin: i32, dmax: i32, bound: u32) -> Result<String, JsValue> {
    character_table_json(m, module, dmin.into(), dmax.into(), bound).map_err(to_js)
}

#[wasm_bindgen]
pub fn poincare(m: u32) -> Result<String, JsValue> {
    poincare_json(m).map_err(to_js)
}
