//! Machine-readable run reports: a fixed JSON schema and a CSV flattening.
//!
//! The JSON layout is
//! `{tool_version, command, params, checks: [{id, description, pass, data}], summary}`;
//! keys are emitted in sorted order and all values are plain JSON, so
//! identical runs produce byte-identical output.

use serde_json::{json, Map, Value};

/// One check row. `pass = None` marks informational rows that do not count
/// toward the exit code.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub pass: Option<bool>,
    pub data: Value,
}

impl CheckRecord {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        pass: Option<bool>,
        data: Value,
    ) -> Self {
        CheckRecord { id: id.into(), description: description.into(), pass, data }
    }
}

/// A full run report.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), params: Map::new(), checks: Vec::new() }
    }

    pub fn param(&mut self, key: &str, value: Value) {
        self.params.insert(key.to_string(), value);
    }

    pub fn push(&mut self, check: CheckRecord) {
        self.checks.push(check);
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass == Some(false)).count()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass == Some(true)).count()
    }

    pub fn indeterminate(&self) -> usize {
        self.checks.iter().filter(|c| c.pass.is_none()).count()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "description": c.description,
                    "pass": c.pass,
                    "data": c.data,
                })
            })
            .collect();
        json!({
            "tool_version": heckelab_core::TOOL_VERSION,
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "checks": checks,
            "summary": {
                "total": self.checks.len(),
                "passed": self.passed(),
                "failed": self.failed(),
                "indeterminate": self.indeterminate(),
            },
        })
    }

    /// CSV: one row per check; the data column carries compact JSON.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,pass,description,data\n");
        for c in &self.checks {
            let pass = match c.pass {
                Some(true) => "true",
                Some(false) => "false",
                None => "",
            };
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_escape(&c.id),
                pass,
                csv_escape(&c.description),
                csv_escape(&c.data.to_string()),
            ));
        }
        out
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Serializes a complex number as a `[re, im]` pair.
pub fn complex_value(z: num_complex::Complex64) -> Value {
    json!([z.re, z.im])
}
