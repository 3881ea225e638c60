//! Tabular output: one deterministic data table per run, written as CSV or
//! JSON with a reproducibility header and an optional gnuplot companion.
//!
//! The data section is a pure function of the command line: no timestamps,
//! no environment echoes, fixed row order, and fixed number formatting
//! (12 significant digits), so identical invocations produce byte-identical
//! files.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// One table entry.
#[derive(Clone, Debug)]
pub enum Cell {
    /// A real value, rendered with 12 significant digits.
    Num(f64),
    /// An integer value, rendered exactly.
    Int(i64),
    /// A short label.
    Text(String),
    /// A column that does not apply to this row.
    Empty,
}

impl Cell {
    /// Optional value helper: `None` becomes an empty cell.
    pub fn opt(value: Option<f64>) -> Cell {
        value.map_or(Cell::Empty, Cell::Num)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => sig12(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(t) => t.replace(',', ";"),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Num(x) => serde_json::json!(x),
            Cell::Int(i) => serde_json::json!(i),
            Cell::Text(t) => serde_json::json!(t),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// Format with 12 significant digits in scientific notation. Zero prints
/// as plain `0` so exactly-absent quantities stand out in the files.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x:.11e}")
}

/// Output format of the data file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Comma-separated values with `#` provenance comments.
    Csv,
    /// A single JSON object with parameters, column names, and row objects.
    Json,
}

/// A finished table ready to be written.
#[derive(Debug)]
pub struct Table {
    /// Subcommand name; also the output file stem.
    pub command: &'static str,
    /// Parameter echoes for the reproducibility header, in flag order.
    pub meta: Vec<(String, String)>,
    /// Column names.
    pub columns: Vec<String>,
    /// Data rows; every row has one cell per column.
    pub rows: Vec<Vec<Cell>>,
    /// Plot body for the gnuplot companion, when the table has one.
    pub gnuplot: Option<String>,
}

impl Table {
    /// Start a table for one subcommand.
    pub fn new(command: &'static str, columns: Vec<String>) -> Table {
        Table {
            command,
            meta: Vec::new(),
            columns,
            rows: Vec::new(),
            gnuplot: None,
        }
    }

    /// Echo one parameter into the header.
    pub fn param(&mut self, key: &str, value: impl std::fmt::Display) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    /// Append one row; panics on a column-count mismatch, which is a bug in
    /// the command builder, not a runtime condition.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    fn header_lines(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# tool: lwig {}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(out, "# library: landau-wigner {}", landau_wigner::VERSION);
        let _ = writeln!(out, "# command: {}", self.command);
        for (key, value) in &self.meta {
            let _ = writeln!(out, "# {key}: {value}");
        }
        let _ = writeln!(out, "# values: 12 significant digits");
        out
    }

    fn to_csv(&self) -> String {
        let mut out = self.header_lines();
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    fn to_json(&self) -> String {
        let params: serde_json::Map<String, serde_json::Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::json!(v)))
            .collect();
        let data: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let object: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| (name.clone(), cell.json()))
                    .collect();
                serde_json::Value::Object(object)
            })
            .collect();
        let document = serde_json::json!({
            "tool": "lwig",
            "tool_version": env!("CARGO_PKG_VERSION"),
            "library_version": landau_wigner::VERSION,
            "command": self.command,
            "parameters": params,
            "columns": self.columns,
            "data": data,
        });
        let mut text = serde_json::to_string_pretty(&document).expect("static document");
        text.push('\n');
        text
    }

    /// Write the data file (and the gnuplot companion when requested) into
    /// `dir`, returning the paths written. A companion always plots the CSV
    /// form, so requesting it alongside JSON writes both data files.
    pub fn write(&self, dir: &Path, format: Format, gnuplot: bool) -> io::Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        let csv_name = format!("{}.csv", self.command);
        if format == Format::Csv || gnuplot {
            let path = dir.join(&csv_name);
            fs::write(&path, self.to_csv())?;
            written.push(path);
        }
        if format == Format::Json {
            let path = dir.join(format!("{}.json", self.command));
            fs::write(&path, self.to_json())?;
            written.push(path);
        }
        if gnuplot {
            let body = self.gnuplot.as_deref().unwrap_or_default();
            let mut script = String::new();
            let _ = writeln!(script, "# companion plot for {csv_name}");
            let _ = writeln!(script, "set datafile separator ','");
            let _ = writeln!(script, "set datafile commentschars '#'");
            let _ = writeln!(script, "set key autotitle columnhead");
            let _ = writeln!(script, "{body}");
            let path = dir.join(format!("{}.gp", self.command));
            fs::write(&path, script)?;
            written.push(path);
        }
        Ok(written)
    }
}
