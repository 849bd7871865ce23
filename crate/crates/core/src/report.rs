//! Output plumbing shared by the command-line entry points: one schema tag,
//! three formats, and a guarantee that identical inputs serialize to
//! identical bytes.
//!
//! JSON comes straight from field-ordered structs (never through a sorted
//! value tree), CSV is built with explicit columns, and floats are printed
//! with Rust's shortest round-trip formatting in both.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

/// Tag stamped into every machine-readable output.
pub const SCHEMA: &str = "cliffbell-1";

/// Output encodings for the command-line tools.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Pretty-prints any field-ordered structure, with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

/// Shortest round-trip decimal for a float (same digits serde_json emits).
pub fn fmt_f64(x: f64) -> String {
    let mut buf = ryu::Buffer::new();
    buf.format(x).to_string()
}

/// A small deterministic CSV writer: explicit header, explicit rows,
/// comma-separated, one trailing newline per row, no quoting (no field the
/// tools emit ever contains a comma).
#[derive(Debug, Default)]
pub struct Csv {
    lines: Vec<String>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        Self {
            lines: vec![header.join(",")],
        }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.lines.push(fields.join(","));
    }

    pub fn finish(self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

/// Column names for a flattened multivector: `prefix_0` … `prefix_7`.
pub fn multivector_header(prefix: &str) -> [String; 8] {
    std::array::from_fn(|k| format!("{prefix}_{k}"))
}

/// Flattens a multivector's eight coefficients into CSV fields.
pub fn multivector_fields(coeffs: [f64; 8]) -> Vec<String> {
    coeffs.iter().map(|c| fmt_f64(*c)).collect()
}

/// Writes to the path when given one, otherwise to stdout.
pub fn write_output(content: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
        }
    }
}
