use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// Exit codes shared by every command.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const SEARCH_FAILURE: i32 = 2;
    pub const INVALID_INPUT: i32 = 3;
    pub const INTEGRITY: i32 = 4;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub n: Option<usize>,
    pub status: Status,
    /// decimal strings, so no count is ever truncated
    pub counts: BTreeMap<String, String>,
    pub elapsed_secs: f64,
    pub seed: u64,
    pub versions: BTreeMap<String, String>,
    /// command-specific payload
    pub details: BTreeMap<String, Value>,
    pub messages: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Pass,
    Fail,
    Partial,
    Error,
}

impl RunReport {
    pub fn new(command: String, n: Option<usize>, seed: u64) -> Self {
        let versions = BTreeMap::from([
            (
                "circlepath".to_string(),
                env!("CARGO_PKG_VERSION").to_string(),
            ),
            (
                "checkpoint_format".to_string(),
                circlepath::realize::checkpoint::VERSION.to_string(),
            ),
        ]);
        Self {
            command,
            n,
            status: Status::Ok,
            counts: BTreeMap::new(),
            elapsed_secs: 0.0,
            seed,
            versions,
            details: BTreeMap::new(),
            messages: Vec::new(),
        }
    }

    pub fn count(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.counts.insert(key.into(), value.to_string());
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("report details serialize");
        self.details.insert(key.into(), value);
        self
    }

    pub fn message(&mut self, text: impl Into<String>) -> &mut Self {
        self.messages.push(text.into());
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        let status = serde_json::to_value(self.status).expect("status serializes");
        let _ = writeln!(
            out,
            "{}  [{}]",
            self.command,
            status.as_str().unwrap_or("?")
        );
        if let Some(n) = self.n {
            let _ = writeln!(out, "  n: {n}");
        }
        for (k, v) in &self.counts {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for (k, v) in &self.details {
            match v {
                Value::Array(items) => {
                    let _ = writeln!(out, "  {k}:");
                    for item in items {
                        let _ = writeln!(out, "    {}", plain(item));
                    }
                }
                other => {
                    let _ = writeln!(out, "  {k}: {}", plain(other));
                }
            }
        }
        for m in &self.messages {
            let _ = writeln!(out, "  note: {m}");
        }
        let _ = writeln!(
            out,
            "  seed: {}  elapsed: {:.3}s",
            self.seed, self.elapsed_secs
        );
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
