//! Deterministic JSON run reports.

use std::collections::BTreeMap;

use biliaison_core::homalg::{BettiTable, FiniteLengthModule};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "biliaison-report/1";

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Assertion {
    pub name: String,
    pub ok: bool,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    /// Input name to SHA-256 of its contents.
    pub inputs: BTreeMap<String, String>,
    pub assertions: Vec<Assertion>,
    pub outputs: Value,
}

impl RunReport {
    pub fn new(command: &str, seed: u64) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            seed,
            inputs: BTreeMap::new(),
            assertions: Vec::new(),
            outputs: json!({}),
        }
    }

    pub fn input(&mut self, name: &str, digest: &str) {
        self.inputs.insert(name.to_string(), digest.to_string());
    }

    pub fn assert(&mut self, name: &str, ok: bool, details: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            ok,
            details: details.into(),
        });
    }

    pub fn output(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.outputs {
            map.insert(key.to_string(), value);
        }
    }

    pub fn all_ok(&self) -> bool {
        self.assertions.iter().all(|a| a.ok)
    }

    pub fn failures(&self) -> Vec<&Assertion> {
        self.assertions.iter().filter(|a| !a.ok).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `{"i": {"j": β_ij}}`.
pub fn betti_json(b: &BettiTable) -> Value {
    let mut out = serde_json::Map::new();
    for (i, row) in b.rows() {
        let cols: serde_json::Map<String, Value> = row.into_iter().map(|(j, n)| (j.to_string(), json!(n))).collect();
        out.insert(i.to_string(), Value::Object(cols));
    }
    Value::Object(out)
}

/// Nonzero graded dimensions, keyed by degree.
pub fn dims_json(m: &FiniteLengthModule) -> Value {
    let map: serde_json::Map<String, Value> = m
        .dims()
        .iter()
        .filter(|(_, &v)| v > 0)
        .map(|(d, v)| (d.to_string(), json!(v)))
        .collect();
    Value::Object(map)
}
