//! Plain-text rendering of a JSON report, key for key.

use serde_json::Value;

pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                field(&mut out, 0, k, x);
            }
        }
        other => {
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn field(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) if map.is_empty() => out.push_str(&format!("{pad}{key}: {{}}\n")),
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, x) in map {
                field(out, depth + 1, k, x);
            }
        }
        Value::Array(xs) if xs.iter().all(is_flat) => {
            let items: Vec<String> = xs.iter().map(scalar).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", items.join(", ")));
        }
        Value::Array(xs) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, x) in xs.iter().enumerate() {
                field(out, depth + 1, &format!("- {}", i + 1), x);
            }
        }
        flat => out.push_str(&format!("{pad}{key}: {}\n", scalar(flat))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_layout() {
        let v = json!({"verdict": "verified", "lms": ["x", "y"], "cert": {"i": 1, "w": null}, "rows": [{"a": 1}]});
        assert_eq!(to_text(&v), "verdict: verified\nlms: [x, y]\ncert:\n  i: 1\n  w: none\nrows:\n  - 1:\n    a: 1\n");
    }
}
