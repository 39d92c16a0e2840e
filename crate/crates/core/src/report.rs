//! Machine-readable command reports.
//!
//! Every report serializes to a JSON object with exactly the keys
//! `command`, `ok`, `witnesses`, `details` and `elapsed_ms`.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::ElementIndex;

/// A labelled tuple of element indices supporting a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub elements: Vec<ElementIndex>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub witnesses: Vec<Witness>,
    pub details: Map<String, Value>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ok: true,
            witnesses: Vec::new(),
            details: Map::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn witness(&mut self, label: impl Into<String>, elements: impl IntoIterator<Item = ElementIndex>) {
        self.witnesses.push(Witness {
            label: label.into(),
            elements: elements.into_iter().collect(),
        });
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("detail values serialize");
        self.details.insert(key.into(), v);
    }

    /// Marks the report failed with a human-readable reason.
    pub fn fail(&mut self, reason: impl Into<String>) {
        self.ok = false;
        self.details.insert("reason".into(), Value::String(reason.into()));
    }

    /// A failed report must say why: a witness or a `reason` detail.
    pub fn is_well_formed(&self) -> bool {
        self.ok || !self.witnesses.is_empty() || self.details.contains_key("reason")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// A compact plain-text rendering for `--json false`.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({:.1} ms)\n",
            self.command,
            if self.ok { "ok" } else { "FAILED" },
            self.elapsed_ms
        );
        for w in &self.witnesses {
            out.push_str(&format!("  witness {}: {:?}\n", w.label, w.elements));
        }
        for (k, v) in &self.details {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        out
    }
}
