//! Fixed-precision number rendering for CSV and JSON outputs.

use serde_json::Value;

/// Significant digits used for every number written to disk.
pub const SIG_DIGITS: usize = 9;

/// Rounds `x` to nine significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Shortest decimal rendering of `x` after rounding to nine significant digits.
///
/// Rendering is idempotent: parsing the output and rendering again yields the
/// same string.
pub fn format_sig(x: f64) -> String {
    let r = round_sig(x);
    if r == r.trunc() && r.abs() < 1e15 {
        format!("{}", r as i64)
    } else {
        format!("{}", r)
    }
}

/// Rounds every floating-point number inside a JSON document.
pub fn round_json(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if n.is_f64() {
                if let Some(x) = n.as_f64() {
                    if let Some(r) = serde_json::Number::from_f64(round_sig(x)) {
                        *n = r;
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}
