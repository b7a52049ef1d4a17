//! Browser bindings: evaluate `P_n`, run the parking process, and run a
//! verification suite at small sizes. Each export returns a JSON string.

use cayley_core::algebra::parse_rational;
use cayley_core::closedform::{p_poly, p_value};
use cayley_core::harness::{self, Ranges, Suite};
use cayley_core::parking::{self, ParkingFn};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest `n` accepted by [`evaluate_p`] and [`verify`]; keeps the page responsive.
pub const MAX_N: u32 = 6;

fn check_n(n: u32) -> Result<(), String> {
    if n > MAX_N {
        return Err(format!("n must be at most {MAX_N} here"));
    }
    Ok(())
}

/// `{"poly": P_n(a,b,c), "value": P_n at the given fractions}`.
pub fn evaluate_p_json(n: u32, a: &str, b: &str, c: &str) -> Result<String, String> {
    check_n(n)?;
    let parse = |s: &str| parse_rational(s.trim()).map_err(|e| e.to_string());
    let (a, b, c) = (parse(a)?, parse(b)?, parse(c)?);
    Ok(json!({
        "poly": p_poly(n).to_string(),
        "value": p_value(n, &a, &b, &c).to_string(),
    })
    .to_string())
}

/// Parks `prefs` (comma-separated) with `c` spare spaces. An empty `order`
/// means increasing arrival order.
pub fn park_json(prefs: &str, c: u32, order: &str) -> Result<String, String> {
    let nums = |s: &str| -> Result<Vec<u32>, String> {
        s.split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<u32>().map_err(|_| format!("bad entry `{p}`")))
            .collect()
    };
    let f = ParkingFn::new(c, nums(prefs)?).map_err(|e| e.to_string())?;
    let outcome = if order.trim().is_empty() {
        parking::park(&f)
    } else {
        parking::park_in_order(&f, &nums(order)?).map_err(|e| e.to_string())?
    };
    let lucky = outcome.lucky_count();
    let mut value = serde_json::to_value(&outcome).map_err(|e| e.to_string())?;
    value["valid"] = json!(f.is_valid());
    value["literal"] = json!(f.to_string());
    if let Some(l) = lucky {
        value["lucky_count"] = json!(l);
    }
    Ok(value.to_string())
}

/// Records of one suite for `n <= n_max`, series suites at order `2 n_max`.
pub fn verify_json(suite: &str, n_max: u32) -> Result<String, String> {
    check_n(n_max)?;
    let suite: Suite = suite.parse().map_err(|e: cayley_core::Error| e.to_string())?;
    let ranges = Ranges {
        n_max: Some(n_max),
        order: Some(2 * n_max as usize),
        points: Some(3),
        ..Ranges::default()
    };
    let records = harness::run(suite, &ranges).map_err(|e| e.to_string())?;
    serde_json::to_string(&records).map_err(|e| e.to_string())
}

pub fn suite_names() -> Vec<&'static str> {
    Suite::ALL.iter().map(|s| s.name()).collect()
}

#[wasm_bindgen(js_name = evaluateP)]
pub fn evaluate_p(n: u32, a: &str, b: &str, c: &str) -> Result<String, JsError> {
    evaluate_p_json(n, a, b, c).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn park(prefs: &str, c: u32, order: &str) -> Result<String, JsError> {
    park_json(prefs, c, order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(suite: &str, n_max: u32) -> Result<String, JsError> {
    verify_json(suite, n_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = suiteNames)]
pub fn suite_names_js() -> String {
    json!(suite_names()).to_string()
}
