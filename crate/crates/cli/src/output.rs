//! Output records and their text, JSON and CSV encodings.

use std::fmt::Write as _;

use admcalc_core::Rational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Table,
    Series,
    Verification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One `(index, value)` pair; values are exact `p/q` (or `p`) strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub index: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: Kind,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    pub payload: Vec<Entry>,
}

impl OutputRecord {
    pub fn new(kind: Kind, name: impl Into<String>) -> Self {
        Self {
            kind,
            name: name.into(),
            degree: None,
            order: None,
            gmax: None,
            note: None,
            status: None,
            payload: Vec::new(),
        }
    }

    /// Payload from consecutive values starting at index 0.
    pub fn with_values<'a>(mut self, values: impl IntoIterator<Item = &'a Rational>) -> Self {
        self.payload = values
            .into_iter()
            .enumerate()
            .map(|(index, v)| Entry { index, value: v.to_string() })
            .collect();
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Text => render_text(records),
        Format::Json => render_json(records),
        Format::Csv => render_csv(records),
    }
}

pub fn render_json(records: &[OutputRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

fn render_csv(records: &[OutputRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "index", "value"]).expect("in-memory write");
    for r in records {
        for e in &r.payload {
            w.write_record([r.name.as_str(), &e.index.to_string(), &e.value])
                .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn render_text(records: &[OutputRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let kind = match r.kind {
            Kind::Table => "table",
            Kind::Series => "series",
            Kind::Verification => "verification",
        };
        let _ = write!(out, "# {} {kind}", r.name);
        if let Some(d) = r.degree {
            let _ = write!(out, ", degree {d}");
        }
        if let Some(n) = r.order {
            let _ = write!(out, ", order {n}");
        }
        if let Some(g) = r.gmax {
            let _ = write!(out, ", gmax {g}");
        }
        if let Some(note) = &r.note {
            let _ = write!(out, " ({note})");
        }
        out.push('\n');
        for e in &r.payload {
            let _ = writeln!(out, "{}\t{}", e.index, e.value);
        }
    }
    out
}
