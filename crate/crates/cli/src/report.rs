use anyhow::bail;
use serde_json::{json, Map, Value};

use crate::args::Format;

/// Version tag carried by every JSON report.
pub const SCHEMA: &str = "spingeo.report/1";

/// Outcome of one subcommand, renderable in each output format.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub passed: bool,
    /// Where the printed numbers come from: model, cutoff, tolerance.
    pub provenance: Map<String, Value>,
    pub result: Value,
    pub human: String,
    pub csv: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            passed: true,
            provenance: Map::new(),
            result: Value::Null,
            human: String::new(),
            csv: None,
        }
    }

    pub fn prov(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.provenance.insert(key.to_string(), v.into());
        self
    }

    pub fn render(&self, format: Format, seed: u64) -> anyhow::Result<String> {
        match format {
            Format::Human => {
                let mut out = self.human.clone();
                if !self.provenance.is_empty() {
                    let parts: Vec<String> = self.provenance.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
                    out.push_str(&format!("provenance: {}\n", parts.join(" ")));
                }
                out.push_str(if self.passed { "result: PASS\n" } else { "result: FAIL\n" });
                Ok(out)
            }
            Format::Json => {
                let v = json!({
                    "schema": SCHEMA,
                    "command": self.command,
                    "seed": seed,
                    "passed": self.passed,
                    "provenance": self.provenance,
                    "result": self.result,
                });
                Ok(serde_json::to_string_pretty(&v)? + "\n")
            }
            Format::Csv => match &self.csv {
                Some(c) => Ok(c.clone()),
                None => bail!("`{}` has no CSV output", self.command),
            },
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
