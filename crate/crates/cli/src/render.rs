//! Plain-text rendering of JSON reports.

use serde_json::Value;

/// `{"value": "...", "error": "..."}` objects print as `value ± error`.
fn as_real(v: &Value) -> Option<String> {
    let obj = v.as_object()?;
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    if !(keys == ["error", "value"] || keys == ["error", "exact_square", "value"]) {
        return None;
    }
    let value = obj.get("value")?.as_str()?;
    let error = obj.get("error")?.as_str()?;
    let shown = trim_decimal(value, 20);
    match obj.get("exact_square") {
        Some(Value::Null) | None => Some(format!("{shown} ± {error}")),
        Some(sq) => Some(format!("{shown} ± {error} (square {})", scalar(sq))),
    }
}

fn trim_decimal(s: &str, digits: usize) -> String {
    match s.split_once('.') {
        Some((i, f)) if f.len() > digits => format!("{i}.{}", &f[..digits]),
        _ => s.to_string(),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(_) => as_real(v).is_some(),
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    if let Some(r) = as_real(v) {
        return r;
    }
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => scalar(other),
    }
}

fn walk(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", flat(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    walk(x, indent + 1, out);
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", flat(x)));
                } else {
                    out.push_str(&format!("{pad}- [{i}]\n"));
                    walk(x, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", flat(other))),
    }
}

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_nested_reports() {
        let v = json!({
            "degree": 2,
            "c": {"value": "2.8509327000000000000000001", "error": "1.0e-38"},
            "primes": [41],
            "record": {"w": 0, "arch": [{"place": 0, "passed": true}]},
        });
        let t = text(&v);
        assert!(t.contains("degree: 2\n"));
        assert!(t.contains("c: 2.85093270000000000000 ± 1.0e-38\n"));
        assert!(t.contains("primes: [41]\n"));
        assert!(t.contains("record:\n  arch:\n    - [0]\n      passed: true\n      place: 0\n  w: 0\n"));
    }
}
