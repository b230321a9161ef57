//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: &str = "hypercell-report/1";
pub const SCHEMA: &str = include_str!("../../../schema/run-report.v1.json");

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything except `timings_ms` is a function of the inputs and the tool
/// version.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub inputs: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub results: BTreeMap<String, Value>,
    pub catalog_digests: BTreeMap<String, String>,
    pub timings_ms: BTreeMap<String, f64>,
    pub passed: bool,
    /// Extra text-mode output such as tables.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            inputs: BTreeMap::new(),
            checks: Vec::new(),
            results: BTreeMap::new(),
            catalog_digests: BTreeMap::new(),
            timings_ms: BTreeMap::new(),
            passed: true,
            text: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.into(), serde_json::to_value(value).expect("serializable input"));
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.into(), serde_json::to_value(value).expect("serializable result"));
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn digest(&mut self, name: &str, bytes: &[u8]) {
        self.catalog_digests.insert(name.into(), sha256(bytes));
    }

    /// Runs `f` and records its wall time under `label`.
    pub fn timed<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(label.into(), start.elapsed().as_secs_f64() * 1e3);
        out
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("hypercell {} {}\n", self.tool_version, self.command);
        for (k, v) in &self.inputs {
            s += &format!("  input {k} = {}\n", compact(v));
        }
        for (k, v) in &self.results {
            let shown = compact(v);
            if shown.len() <= 160 {
                s += &format!("  {k}: {shown}\n");
            } else {
                s += &format!("  {k}: ({} bytes, see --json)\n", shown.len());
            }
        }
        for block in &self.text {
            s += block;
        }
        for (k, v) in &self.catalog_digests {
            s += &format!("  digest {k} {v}\n");
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                s += &format!("{tag} {}\n", c.name);
            } else {
                s += &format!("{tag} {}: {}\n", c.name, c.detail);
            }
        }
        s += if self.passed { "overall: PASS\n" } else { "overall: FAIL\n" };
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn sha256(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}
