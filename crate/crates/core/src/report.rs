//! Verification reports: named pass/fail checks with optional witnesses,
//! serialized with a stable key order.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub kind: String,
    pub pair: String,
    #[serde(rename = "universeSize")]
    pub universe_size: usize,
    pub cap: usize,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

impl Report {
    pub fn new(kind: &str, pair: impl Into<String>, universe_size: usize, cap: usize) -> Self {
        Report { kind: kind.into(), pair: pair.into(), universe_size, cap, checks: Vec::new(), data: Value::Null }
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: Option<Value>) {
        let witness = if pass { None } else { witness };
        self.checks.push(Check { name: name.into(), pass, witness });
    }

    /// Records a check whose witness is kept even on success.
    pub fn record(&mut self, name: &str, pass: bool, witness: Value) {
        self.checks.push(Check { name: name.into(), pass, witness: Some(witness) });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(&mut self, prefix: &str, other: &Report) {
        for c in &other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), pass: c.pass, witness: c.witness.clone() });
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
