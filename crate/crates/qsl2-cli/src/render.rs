//! Output rendering. JSON is compact with keys in sorted order (the default
//! `serde_json` map is ordered); text is an indented key/value listing.

use serde_json::Value;

use crate::Output;

pub fn render(v: &Value, output: Output) -> String {
    match output {
        Output::Json => format!("{v}\n"),
        Output::Text => {
            let mut out = String::new();
            text(v, 0, &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(a) if a.iter().all(|x| x.is_array()) => {
            let rows: Option<Vec<String>> = a.iter().map(scalar).collect();
            rows.map(|r| format!("[{}]", r.join(", ")))
        }
        _ => None,
    }
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        text(x, indent + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn sorted_compact_json() {
        let v = json!({"zeta": 1, "alpha": [1, "x"], "mid": null});
        assert_eq!(
            render(&v, Output::Json),
            "{\"alpha\":[1,\"x\"],\"mid\":null,\"zeta\":1}\n"
        );
    }

    #[test]
    fn text_listing() {
        let v = json!({"b": [{"k": 1}], "a": [[1, "2"]]});
        assert_eq!(render(&v, Output::Text), "a: [[1, 2]]\nb:\n  -\n    k: 1\n");
    }
}
