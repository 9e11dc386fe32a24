//! WebAssembly bindings behind the static demo page in `www/`.
//!
//! Each export returns a JSON string. The work happens in plain Rust
//! functions so the same code is exercised by native tests.

use fusionkit::fusion::fuse;
use fusionkit::modular::{verify_modular, verlinde_tensor};
use fusionkit::nimrep::{compare_printed, TwistedSolution};
use fusionkit::{AlgebraParams, ModularData, Weight};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest alphabet the page will draw.
pub const MAX_ALPHABET: usize = 120;
/// Largest SU(3) level offered for the twisted solver.
pub const MAX_TWISTED_LEVEL: u32 = 12;

fn params(n: usize, k: u32) -> Result<AlgebraParams, String> {
    let p = AlgebraParams::new(n, k).map_err(|e| e.to_string())?;
    if p.alphabet_size() > MAX_ALPHABET {
        return Err(format!(
            "{p} has {} weights; the demo stops at {MAX_ALPHABET}",
            p.alphabet_size()
        ));
    }
    Ok(p)
}

fn round(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

/// Weight names, dimensions, conformal weights and `S` as modulus/phase
/// pairs, plus the outcome of the modular relation checks.
pub fn modular_summary(n: usize, k: u32) -> Result<Value, String> {
    let md = ModularData::compute(params(n, k)?).map_err(|e| e.to_string())?;
    let r = md.rank();
    let s = md.s();
    let report = verify_modular(&md);
    Ok(json!({
        "title": md.params().to_string(),
        "weights": md.weights().iter().map(Weight::to_string).collect::<Vec<_>>(),
        "dims": md.dims().iter().map(|&d| round(d)).collect::<Vec<_>>(),
        "conformal_weights": md.conformal_weights().iter().map(|h| h.to_string()).collect::<Vec<_>>(),
        "modulus": (0..r).map(|i| (0..r).map(|j| round(s[(i, j)].norm())).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "phase": (0..r).map(|i| (0..r).map(|j| round(s[(i, j)].arg())).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "c0": round(md.c0()),
        "global_dimension_squared": round(md.global_dimension_squared()),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "deviation": c.max_deviation,
        })).collect::<Vec<_>>(),
    }))
}

/// Parses `"1,0"` or `"(1,0)"` into a weight.
pub fn parse_weight(text: &str) -> Result<Weight, String> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let labels = inner
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad label {t:?} in {text:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Weight::new(labels))
}

/// `λ × μ` with multiplicities and the dimension balance `d_λ d_μ = Σ N d_ν`.
pub fn fusion_product(n: usize, k: u32, lambda: &str, mu: &str) -> Result<Value, String> {
    let p = params(n, k)?;
    let (a, b) = (parse_weight(lambda)?, parse_weight(mu)?);
    p.check(&a).map_err(|e| e.to_string())?;
    p.check(&b).map_err(|e| e.to_string())?;
    let md = ModularData::compute(p).map_err(|e| e.to_string())?;
    let t = verlinde_tensor(&md).map_err(|e| e.to_string())?;
    let terms = fuse(&a, &b, &t).map_err(|e| e.to_string())?;
    let dim = |w: &Weight| md.dims()[md.index_of(w).expect("weight in alphabet")];
    let rhs: f64 = terms.iter().map(|(w, m)| *m as f64 * dim(w)).sum();
    Ok(json!({
        "lambda": a.to_string(),
        "mu": b.to_string(),
        "terms": terms.iter().map(|(w, m)| json!({
            "weight": w.to_string(),
            "multiplicity": m,
            "dim": round(dim(w)),
        })).collect::<Vec<_>>(),
        "lhs": round(dim(&a) * dim(&b)),
        "rhs": round(rhs),
    }))
}

/// Solved `N_v`, its graph, soliton dimensions and the printed-formula
/// comparison for SU(3)_k.
pub fn twisted_solution(k: u32) -> Result<Value, String> {
    if !(1..=MAX_TWISTED_LEVEL).contains(&k) {
        return Err(format!("level must lie in 1..={MAX_TWISTED_LEVEL}"));
    }
    let sol = TwistedSolution::compute(k).map_err(|e| e.to_string())?;
    let cmp = compare_printed(&sol);
    let m = sol.nv.nrows();
    let class = &sol.report.classes[0];
    Ok(json!({
        "title": sol.modular.params().to_string(),
        "m": m,
        "nv": (0..m).map(|i| (0..m).map(|j| sol.nv[(i, j)]).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "classes": sol.report.classes.len(),
        "coxeter": class.coxeter.as_ref().and_then(|c| c.name()),
        "dims": sol.spectrum.dims.iter().map(|&x| round(x)).collect::<Vec<_>>(),
        "indices": sol.spectrum.indices.iter().map(|&x| round(x)).collect::<Vec<_>>(),
        "printed": cmp.printed.iter().map(|&x| round(x)).collect::<Vec<_>>(),
        "ratios": cmp.ratios.iter().map(|&x| round(x)).collect::<Vec<_>>(),
        "delta": round(sol.spectrum.delta),
        "mu": round(sol.modular.global_dimension_squared()),
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = modularSummary)]
pub fn modular_summary_js(n: usize, k: u32) -> Result<String, JsValue> {
    to_js(modular_summary(n, k))
}

#[wasm_bindgen(js_name = fusionProduct)]
pub fn fusion_product_js(n: usize, k: u32, lambda: &str, mu: &str) -> Result<String, JsValue> {
    to_js(fusion_product(n, k, lambda, mu))
}

#[wasm_bindgen(js_name = twistedSolution)]
pub fn twisted_solution_js(k: u32) -> Result<String, JsValue> {
    to_js(twisted_solution(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_of_su2_level1() {
        let v = modular_summary(2, 1).unwrap();
        assert_eq!(v["weights"], json!(["(0)", "(1)"]));
        let h = (0.5f64).sqrt();
        assert!((v["modulus"][0][1].as_f64().unwrap() - h).abs() < 1e-9);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }

    #[test]
    fn oversized_alphabet_is_refused() {
        assert!(modular_summary(5, 8).unwrap_err().contains("stops at"));
    }

    #[test]
    fn su3_fundamental_times_antifundamental() {
        let v = fusion_product(3, 1, "1,0", "(0,1)").unwrap();
        assert_eq!(v["terms"], json!([{ "weight": "(0,0)", "multiplicity": 1, "dim": 1.0 }]));
        let v = fusion_product(2, 4, "1", "2").unwrap();
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        assert_eq!(v["lhs"], v["rhs"]);
    }

    #[test]
    fn weight_parsing() {
        assert_eq!(parse_weight(" (2, 1) ").unwrap(), Weight::new(vec![2, 1]));
        assert!(parse_weight("a,1").is_err());
        assert!(fusion_product(3, 1, "2,0", "0,0").is_err());
    }

    #[test]
    fn twisted_level3() {
        let v = twisted_solution(3).unwrap();
        assert_eq!(v["nv"], json!([[1, 1], [1, 1]]));
        assert_eq!(v["coxeter"], "A2");
        assert_eq!(v["indices"], json!([18.0, 18.0]));
        assert_eq!(v["printed"], json!([36.0, 36.0]));
        assert!(twisted_solution(13).is_err());
    }
}
