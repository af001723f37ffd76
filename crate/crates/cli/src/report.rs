use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Map, Value};

/// A named table of JSON-compatible cells.
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    /// Replaces the generic grid in text output.
    pub text: Option<String>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            text: None,
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn to_json(&self) -> Value {
        json!({ "name": self.name, "columns": self.columns, "rows": self.rows })
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "== {} ==", self.name);
        if let Some(t) = &self.text {
            out.push_str(t);
            if !t.ends_with('\n') {
                out.push('\n');
            }
            return;
        }
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(cell_text).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain([self.columns[j].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |row: &[String]| {
            row.iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let _ = writeln!(out, "{}", line(&self.columns));
        for r in &cells {
            let _ = writeln!(out, "{}", line(r));
        }
    }
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// An identity found or checked by a run.
pub struct IdentityEntry {
    pub name: String,
    pub text: String,
    pub verified: bool,
}

/// Everything a subcommand produces. JSON output omits the timing so that
/// it is byte-stable across runs.
pub struct RunReport {
    pub subcommand: String,
    pub params: Map<String, Value>,
    pub tables: Vec<Table>,
    pub identities: Vec<IdentityEntry>,
    pub elapsed: Option<Duration>,
}

impl RunReport {
    pub fn new(subcommand: &str) -> Self {
        RunReport {
            subcommand: subcommand.into(),
            params: Map::new(),
            tables: Vec::new(),
            identities: Vec::new(),
            elapsed: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.into(), value.into());
    }

    pub fn to_json(&self) -> String {
        let identities: Vec<Value> = self
            .identities
            .iter()
            .map(|i| json!({ "name": i.name, "text": i.text, "verified": i.verified }))
            .collect();
        let v = json!({
            "schema": 1,
            "subcommand": self.subcommand,
            "params": self.params,
            "tables": self.tables.iter().map(Table::to_json).collect::<Vec<_>>(),
            "identities": identities,
        });
        serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "comtrans {}", self.subcommand);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k}: {}", cell_text(v));
        }
        for t in &self.tables {
            out.push('\n');
            t.render(&mut out);
        }
        if !self.identities.is_empty() {
            let _ = writeln!(out, "\n== identities ==");
            for i in &self.identities {
                let mark = if i.verified { "verified" } else { "NOT VERIFIED" };
                let _ = writeln!(out, "{} [{mark}]\n  {}", i.name, i.text);
            }
        }
        if let Some(d) = self.elapsed {
            let _ = writeln!(out, "\nelapsed: {:.3} s", d.as_secs_f64());
        }
        out
    }
}
