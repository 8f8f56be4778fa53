//! Deterministic reports: a human-readable table on stdout plus an optional
//! JSON file. All maps are ordered, so identical inputs and flags produce
//! byte-identical output.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use lgcat::hilbert::HilbertFunction;

pub struct Report {
    pub command: String,
    /// None: informational command; Some(b): a verified/failed claim.
    pub verified: Option<bool>,
    pub fields: Vec<(String, Value)>,
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), verified: None, fields: Vec::new(), lines: Vec::new() }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn field(&mut self, key: &str, value: Value) {
        self.fields.push((key.to_string(), value));
    }

    pub fn text(&mut self, key: &str, value: impl Into<String>) {
        let v: String = value.into();
        self.lines.push(format!("{key}: {v}"));
        self.fields.push((key.to_string(), Value::String(v)));
    }

    pub fn hilbert(&mut self, key: &str, h: &HilbertFunction) {
        self.lines.push(format!("{key}: {h}"));
        self.fields.push((key.to_string(), hilbert_json(h)));
    }

    pub fn claim(&mut self, key: &str, ok: bool) {
        self.lines.push(format!("{key}: {}", if ok { "verified" } else { "FAILED" }));
        self.fields.push((key.to_string(), Value::Bool(ok)));
        self.verified = Some(self.verified.unwrap_or(true) && ok);
    }

    pub fn finish(self, json_path: Option<&std::path::Path>) -> std::io::Result<i32> {
        println!("== {} ==", self.command);
        for l in &self.lines {
            println!("{l}");
        }
        let status = match self.verified {
            Some(true) | None => 0,
            Some(false) => 1,
        };
        if let Some(v) = self.verified {
            println!("status: {}", if v { "ok" } else { "failed" });
        }
        if let Some(path) = json_path {
            let mut map = BTreeMap::new();
            map.insert("command".to_string(), Value::String(self.command.clone()));
            if let Some(v) = self.verified {
                map.insert("verified".to_string(), Value::Bool(v));
            }
            for (k, v) in &self.fields {
                map.insert(k.clone(), v.clone());
            }
            let text = serde_json::to_string_pretty(&map)?;
            std::fs::write(path, text + "\n")?;
        }
        Ok(status)
    }
}

pub fn hilbert_json(h: &HilbertFunction) -> Value {
    json!({
        "even": h.even,
        "odd": h.odd,
        "trusted_upto": h.trusted_upto,
    })
}
