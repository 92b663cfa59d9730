//! WebAssembly bindings for a static demo page. Every export returns a JSON
//! summary: the nonzero structure constants, the inferred parameters and the
//! verification checks.

use serde_json::{json, Value};
use tasaki_core::constructions::{flat_boothby_wang, h_deformation, heisenberg, DeformationParams, FlatHyperkahler};
use tasaki_core::contact::{infer_parameters, verify_3ad, verify_degenerate};
use tasaki_core::scalar::parse_scalar;
use tasaki_core::{Rational, SasakianLieAlgebra, Scalar};
use wasm_bindgen::prelude::*;

const MAX_N: usize = 3;

fn summary(l: &SasakianLieAlgebra<Rational>) -> Result<Value, String> {
    let (alg, s) = (&l.algebra, &l.structure);
    let inferred = infer_parameters(alg, s).map_err(|e| e.to_string())?;
    let mut report = verify_3ad(alg, s, &l.params).map_err(|e| e.to_string())?;
    if l.params.is_degenerate() {
        report.extend(verify_degenerate(alg, s, &l.params.alpha).map_err(|e| e.to_string())?);
    }
    let constants: Vec<Value> =
        alg.structure_constants().map(|(i, j, k, c)| json!([i, j, k, c.to_string()])).collect();
    let checks: Vec<Value> = report.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect();
    Ok(json!({
        "dim": l.dim(),
        "structure_constants": constants,
        "alpha": inferred.alpha.map(|a| a.to_string()),
        "delta": inferred.delta.to_string(),
        "passed": report.passed(),
        "checks": checks,
    }))
}

fn scalar(text: &str, name: &str) -> Result<Rational, String> {
    parse_scalar::<Rational>(text.trim()).map_err(|e| format!("{name}: {e}"))
}

/// `heisenberg(n)` for `1 <= n <= 3`.
pub fn heisenberg_json(n: usize) -> Result<String, String> {
    if !(1..=MAX_N).contains(&n) {
        return Err(format!("n must be between 1 and {MAX_N}"));
    }
    Ok(summary(&heisenberg(n).map_err(|e| e.to_string())?)?.to_string())
}

/// `heisenberg(1)` after the deformation with parameters `(1, λ² − 1, λ)`.
pub fn deform_json(lambda: &str) -> Result<String, String> {
    let d = DeformationParams::from_lambda(scalar(lambda, "lambda")?).map_err(|e| e.to_string())?;
    let h = heisenberg::<Rational>(1).map_err(|e| e.to_string())?;
    Ok(summary(&h_deformation(&h, &d).map_err(|e| e.to_string())?)?.to_string())
}

/// Flat central extension of `ℝ⁴` with parameter `α`.
pub fn flat_bw_json(alpha: &str) -> Result<String, String> {
    let alpha = scalar(alpha, "alpha")?;
    if alpha.is_zero() {
        return Err("alpha must be nonzero".into());
    }
    let base = FlatHyperkahler::standard(1).map_err(|e| e.to_string())?;
    Ok(summary(&flat_boothby_wang(&base, alpha).map_err(|e| e.to_string())?)?.to_string())
}

#[wasm_bindgen(js_name = heisenberg)]
pub fn heisenberg_js(n: usize) -> Result<String, JsValue> {
    heisenberg_json(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = deform)]
pub fn deform_js(lambda: &str) -> Result<String, JsValue> {
    deform_json(lambda).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = flatBoothbyWang)]
pub fn flat_bw_js(alpha: &str) -> Result<String, JsValue> {
    flat_bw_json(alpha).map_err(|e| JsValue::from_str(&e))
}
