//! Command reports: ordered data fields plus named pass/fail checks.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    fields: Vec<(String, Value)>,
    checks: Vec<(String, bool)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            fields: Vec::new(),
            checks: Vec::new(),
        }
    }

    /// Record a data field. Fields keep insertion order.
    pub fn put(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.fields.push((key.to_string(), value));
    }

    /// Record a display string, for exact scalars and polynomials.
    pub fn put_str(&mut self, key: &str, value: impl ToString) {
        self.put(key, value.to_string());
    }

    pub fn check(&mut self, name: &str, holds: bool) {
        self.checks.push((name.to_string(), holds));
    }

    pub fn field(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn checks(&self) -> &[(String, bool)] {
        &self.checks
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|&(_, b)| b)
    }

    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), Value::String(self.command.clone()));
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.clone());
        }
        let checks: Map<String, Value> = self
            .checks
            .iter()
            .map(|(k, b)| (k.clone(), Value::Bool(*b)))
            .collect();
        obj.insert("checks".into(), Value::Object(checks));
        obj.insert("ok".into(), Value::Bool(self.ok()));
        Value::Object(obj)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (k, v) in &self.fields {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("  {k}: {shown}\n"));
        }
        for (k, b) in &self.checks {
            out.push_str(&format!("  [{}] {k}\n", if *b { "PASS" } else { "FAIL" }));
        }
        out.push_str(if self.ok() { "all checks pass\n" } else { "some checks FAILED\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keeps_insertion_order() {
        let mut r = Report::new("demo");
        r.put("zeta", 1);
        r.put("alpha", "x");
        r.check("b", true);
        r.check("a", false);
        let json = r.to_json();
        assert!(json.find("zeta").unwrap() < json.find("alpha").unwrap());
        assert!(json.find("\"b\"").unwrap() < json.find("\"a\"").unwrap());
        assert!(!r.ok());
        assert!(r.to_text().contains("[FAIL] a"));
    }
}
