use std::fmt::Write;

use serde_json::Value;
use typea::cyclotomic::Cyclotomic;

use crate::Report;

/// Short symbolic form: `1`, `-1`, `i`, `-i`, `ζ_N^k`, or a sum of such terms.
pub fn symbolic(c: &Cyclotomic) -> String {
    c.to_string()
}

fn as_cyclotomic(v: &Value) -> Option<Cyclotomic> {
    let obj = v.as_object()?;
    if obj.len() == 2 && obj.contains_key("N") && obj.contains_key("coeffs") {
        serde_json::from_value(v.clone()).ok()
    } else {
        None
    }
}

fn scalar(v: &Value) -> Option<String> {
    if let Some(c) = as_cyclotomic(v) {
        return Some(symbolic(&c));
    }
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| scalar(x).is_some() && !x.is_array() && !x.is_object() || as_cyclotomic(x).is_some()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(items) if items.iter().all(|x| x.as_array().is_some_and(|a| a.iter().all(|y| !y.is_array() && !y.is_object()))) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn walk(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                walk(out, k, x, depth + 1);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                walk(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        _ => {}
    }
}

/// Indented plain-text rendering of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "typea {} (schema {})", report.command, report.schema_version);
    walk(&mut out, "inputs", &report.inputs, 0);
    walk(&mut out, "results", &report.results, 0);
    if !report.verdicts.is_empty() {
        let _ = writeln!(out, "verdicts:");
        for v in &report.verdicts {
            let tag = if v.passed { "PASS" } else { "FAIL" };
            match &v.detail {
                Some(d) => {
                    let _ = writeln!(out, "  [{tag}] {} ({d})", v.name);
                }
                None => {
                    let _ = writeln!(out, "  [{tag}] {}", v.name);
                }
            }
        }
    }
    out
}
