//! Machine-readable reports shared by the command line and the acceptance runner.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One pass/fail verdict of a check that was actually run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Verdict {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Verdict { name: name.into(), passed, detail: detail.into() }
    }
}

/// Command echo, inputs, verdicts, artifacts and timing of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub verdicts: Vec<Verdict>,
    pub artifacts: Value,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value) -> Self {
        Report { command: command.into(), inputs, verdicts: Vec::new(), artifacts: Value::Null, elapsed_ms: 0 }
    }

    /// Whether every verdict passed; a report without verdicts passes.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    /// Plain-text rendering: verdict lines followed by the artifacts.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, compact(&self.inputs));
        render_value(&mut out, &self.artifacts, 1);
        for v in &self.verdicts {
            let mark = if v.passed { "PASS" } else { "FAIL" };
            if v.detail.is_empty() {
                let _ = writeln!(out, "{mark} {}", v.name);
            } else {
                let _ = writeln!(out, "{mark} {}: {}", v.name, v.detail);
            }
        }
        let _ = writeln!(out, "({} ms)", self.elapsed_ms);
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect::<Vec<_>>().join(" "),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(a) => a.iter().all(is_flat),
        _ => true,
    }
}

fn render_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_value(out, x, depth + 1);
                    }
                    Value::Array(a) if !is_flat(x) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in a {
                            let _ = writeln!(out, "{pad}  -");
                            render_value(out, item, depth + 2);
                        }
                    }
                    other => {
                        let _ = writeln!(out, "{pad}{k}: {}", compact(other));
                    }
                }
            }
        }
        Value::Array(a) => {
            for item in a {
                render_value(out, item, depth);
            }
        }
        Value::Null => {}
        other => {
            let _ = writeln!(out, "{pad}{}", compact(other));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_text() {
        let mut r = Report::new("count", json!({"family": "A", "rank": 3}));
        r.push(Verdict::new("isaacs", true, ""));
        r.artifacts = json!({"v": "v^3 + 3v^2 + 2v", "coeffs": [0, 2, 3, 1]});
        let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        let text = r.render_text();
        assert!(text.contains("PASS isaacs"));
        assert!(text.contains("coeffs: [0,2,3,1]"));
        assert!(r.passed());
    }
}
