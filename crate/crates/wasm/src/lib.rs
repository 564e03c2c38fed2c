//! Bindings behind the static demo page in `www/`.
//!
//! Every operation takes plain strings and numbers and returns a JSON
//! document, so the page needs no glue beyond `JSON.parse`. The `*_json`
//! functions are the portable implementations; the exported wrappers only
//! convert errors into JavaScript exceptions.

use std::sync::Arc;

use num_bigint::BigUint;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ghws::{ComputeOptions, FiniteField, LinearCode};

/// Largest enumeration the page may request in one call.
const ENUMERATION_CAP: usize = 2000;

/// Subspace count ceiling for spectra, kept small so the page stays responsive.
const SPECTRUM_LIMIT: u64 = 2_000_000;

fn field(p: u32, s: u32) -> Result<Arc<FiniteField>, String> {
    FiniteField::new(p, s, None).map(Arc::new).map_err(|e| e.to_string())
}

fn parse(text: &str) -> Result<LinearCode, String> {
    ghws::parse_code_file(text).map_err(|e| e.to_string())
}

fn big(v: &BigUint) -> Value {
    u64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::from(v.to_string()))
}

/// A code file for a standard family: `rs` uses `(k)`, `rm` uses `(nu, m)`.
pub fn make_code_text(kind: &str, p: u32, s: u32, a: usize, b: usize) -> Result<String, String> {
    let f = field(p, s)?;
    let code = match kind {
        "rs" => LinearCode::reed_solomon(f, a),
        "rm" => LinearCode::reed_muller(f, a, b),
        "bch" => LinearCode::bch(f, a, b),
        _ => return Err(format!("unknown family `{kind}`")),
    }
    .map_err(|e| e.to_string())?;
    Ok(ghws::write_code_file(&code))
}

/// Weight hierarchy with the bound trace of every round.
pub fn hierarchy_trace_json(text: &str) -> Result<String, String> {
    let code = parse(text)?;
    let reports = ghws::hierarchy_report(&code, &ComputeOptions::default()).map_err(|e| e.to_string())?;
    let runs: Vec<Value> = reports
        .iter()
        .map(|rep| {
            let rounds: Vec<Value> = rep
                .rounds
                .iter()
                .map(|e| json!({"w": e.w, "lower": e.lower, "upper": e.upper, "mats": e.active, "subspaces": e.subspaces}))
                .collect();
            json!({
                "r": rep.r,
                "value": rep.value,
                "initial_lower": rep.initial_lower,
                "subspaces": rep.subspaces,
                "witness": rep.witness.basis.to_rows(),
                "rounds": rounds,
            })
        })
        .collect();
    let hierarchy: Vec<usize> = reports.iter().map(|r| r.value).collect();
    Ok(json!({"n": code.n(), "k": code.k(), "q": code.field().q(), "hierarchy": hierarchy, "runs": runs}).to_string())
}

/// Higher weight spectrum as `{"counts": [{w: count}, ...]}`, one map per dimension.
pub fn spectrum_json(text: &str) -> Result<String, String> {
    let code = parse(text)?;
    let opts = ComputeOptions { work_limit: SPECTRUM_LIMIT, ..ComputeOptions::default() };
    let s = ghws::higher_spectrum(&code, &opts).map_err(|e| e.to_string())?;
    let counts: Vec<Value> =
        s.counts.iter().map(|row| Value::Object(row.iter().map(|(w, c)| (w.to_string(), big(c))).collect())).collect();
    Ok(json!({"n": code.n(), "k": code.k(), "q": code.field().q(), "counts": counts}).to_string())
}

/// The r x w reduced bases with full support, up to `limit` of them, with
/// the exact total.
pub fn enumerate_json(p: u32, s: u32, r: usize, w: usize, limit: usize) -> Result<String, String> {
    let f = field(p, s)?;
    let total = ghws::count_full_support(w, r, f.q() as u64).map_err(|e| e.to_string())?;
    let shown: Vec<Vec<Vec<u32>>> = ghws::subspaces(r, w, f)
        .map_err(|e| e.to_string())?
        .take(limit.min(ENUMERATION_CAP))
        .map(|s| s.matrix.to_rows())
        .collect();
    Ok(json!({"r": r, "w": w, "total": big(&total), "matrices": shown}).to_string())
}

#[wasm_bindgen]
pub fn make_code(kind: &str, p: u32, s: u32, a: usize, b: usize) -> Result<String, JsError> {
    make_code_text(kind, p, s, a, b).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hierarchy_trace(text: &str) -> Result<String, JsError> {
    hierarchy_trace_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn spectrum(text: &str) -> Result<String, JsError> {
    spectrum_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn enumerate(p: u32, s: u32, r: usize, w: usize, limit: usize) -> Result<String, JsError> {
    enumerate_json(p, s, r, w, limit).map_err(|e| JsError::new(&e))
}
