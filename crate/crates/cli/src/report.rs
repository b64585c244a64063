//! Report documents: a JSON tree rendered as sorted-key machine output or an
//! indented human format.

use serde_json::{json, Map, Value};

/// Builds the top-level document shared by all subcommands.
pub fn document(command: &str) -> Map<String, Value> {
    let mut doc = Map::new();
    doc.insert("command".into(), json!(command));
    doc.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    doc
}

/// Machine rendering: canonical JSON with sorted keys (serde_json maps are
/// ordered) and a trailing newline.
pub fn render_machine(doc: &Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(doc.clone()))
        .expect("report values serialize");
    s.push('\n');
    s
}

/// Human rendering: an indented key/value walk.
pub fn render_human(doc: &Map<String, Value>) -> String {
    let mut out = String::new();
    walk(&Value::Object(doc.clone()), 0, &mut out);
    out
}

fn walk(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(v, depth + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        walk(item, depth + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
