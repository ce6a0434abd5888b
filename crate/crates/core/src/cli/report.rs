use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde_json::Value;

use super::Format;
use crate::error::{Error, Result};

/// Rows with a header, shared by the CSV and text renderings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Table {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// A command's result. `json` is the machine-readable body, `table` the CSV
/// body; text shows `summary`, followed by `table` when `text_table` is set.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub summary: Vec<(String, String)>,
    pub table: Table,
    pub text_table: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            // serde_json's map keeps keys sorted.
            Format::Json => {
                serde_json::to_string_pretty(&self.json).expect("json value serializes") + "\n"
            }
            Format::Csv => render_csv(&self.table),
            Format::Text => render_text(self),
        }
    }
}

fn render_csv(table: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.header).expect("in-memory write");
    for row in &table.rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let key_width = report
        .summary
        .iter()
        .map(|(k, _)| k.len())
        .max()
        .unwrap_or(0);
    for (k, v) in &report.summary {
        let _ = writeln!(out, "{k:<key_width$}  {v}");
    }
    let table = &report.table;
    if !report.text_table || table.rows.is_empty() {
        return out;
    }
    if !out.is_empty() {
        out.push('\n');
    }
    let widths: Vec<usize> = (0..table.header.len())
        .map(|i| {
            table
                .rows
                .iter()
                .map(|r| r[i].len())
                .chain([table.header[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&table.header);
    for r in &table.rows {
        line(r);
    }
    out
}

/// Writes the rendered report to `path`, or to standard output.
pub fn report_write(report: &Report, format: Format, path: Option<&Path>) -> Result<()> {
    let body = report.render(format);
    match path {
        Some(p) => std::fs::write(p, body).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| Error::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
