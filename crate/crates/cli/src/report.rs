use std::fmt::Write as _;

use serde_json::Value;

/// Output of one command run over one field.
#[derive(Debug, Default)]
pub struct Report {
    pub title: String,
    pub rows: Vec<(String, String)>,
    pub records: Vec<Value>,
    /// Dimensions compared across fields in two-prime mode.
    pub dims: Vec<(String, usize)>,
    pub failed: bool,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Report::default()
        }
    }

    pub fn row(&mut self, key: impl Into<String>, value: impl ToString) {
        self.rows.push((key.into(), value.to_string()));
    }

    pub fn dim(&mut self, key: &str, d: usize) {
        self.row(key, d);
        self.dims.push((key.to_string(), d));
    }

    pub fn record(&mut self, v: Value) {
        self.records.push(v);
    }

    pub fn fail(&mut self, why: impl ToString) {
        self.failed = true;
        self.row("FAILURE", why);
    }

    pub fn table(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = format!("== {} ==\n", self.title);
        for (k, v) in &self.rows {
            let pad = width - k.chars().count();
            let _ = writeln!(out, "  {k}{}  {v}", " ".repeat(pad));
        }
        out
    }

    pub fn lines(&self) -> String {
        self.records.iter().map(|r| format!("{r}\n")).collect()
    }
}
