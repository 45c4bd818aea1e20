//! CSV emission for time-series tables.
//!
//! One `t` column followed by one named column per curve. Cells are printed
//! with 15 significant digits in scientific notation so reruns diff cleanly;
//! undefined values (e.g. Mandel Q at zero occupation) become empty cells.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// In-memory table: a header row plus numeric rows of equal width.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

impl Table {
    pub fn new(headers: Vec<String>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    /// Append a row. Width must match the header row.
    pub fn push_row(&mut self, row: Vec<Option<f64>>) {
        assert_eq!(
            row.len(),
            self.headers.len(),
            "row width {} != header width {}",
            row.len(),
            self.headers.len()
        );
        self.rows.push(row);
    }

    /// Column index by header name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    /// Render to CSV text. Deterministic: same table, same bytes.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut first = true;
            for cell in row {
                if !first {
                    out.push(',');
                }
                first = false;
                if let Some(v) = cell {
                    let _ = write!(out, "{}", format_cell(*v));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render())?;
        Ok(())
    }

    /// Parse CSV text produced by `render`.
    pub fn parse(text: &str) -> Result<Table> {
        let mut lines = text.lines();
        let header_line = lines
            .next()
            .ok_or_else(|| Error::InvalidTimeGrid("empty CSV".into()))?;
        let headers: Vec<String> = header_line.split(',').map(|s| s.to_string()).collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::with_capacity(headers.len());
            for cell in line.split(',') {
                if cell.is_empty() {
                    row.push(None);
                } else {
                    let v: f64 = cell.parse().map_err(|e| {
                        Error::InvalidTimeGrid(format!("row {}: bad cell {:?}: {}", i + 2, cell, e))
                    })?;
                    row.push(Some(v));
                }
            }
            if row.len() != headers.len() {
                return Err(Error::InvalidTimeGrid(format!(
                    "row {} has {} cells, expected {}",
                    i + 2,
                    row.len(),
                    headers.len()
                )));
            }
            rows.push(row);
        }
        Ok(Table { headers, rows })
    }

    pub fn read(path: &Path) -> Result<Table> {
        Table::parse(&std::fs::read_to_string(path)?)
    }
}

/// 15 significant digits, scientific notation, locale-free.
pub fn format_cell(v: f64) -> String {
    format!("{:.14e}", v)
}
