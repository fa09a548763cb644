//! Deterministic table writing: CSV with '#'-prefixed config headers and 17
//! significant digits, or the equivalent JSON document.

use crate::CliError;
use serde_json::json;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        match name {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Config(format!("unknown format '{other}', expected csv or json"))),
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }

    pub fn name(self) -> &'static str {
        self.extension()
    }
}

/// One table cell; numeric cells are rendered with 17 significant digits.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
}

/// 17-significant-digit rendering, round-trip exact for f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn cell_csv(c: &Cell) -> String {
    match c {
        Cell::Num(v) => fmt_f64(*v),
        Cell::Int(v) => v.to_string(),
        Cell::Text(t) => t.clone(),
    }
}

fn cell_json(c: &Cell) -> serde_json::Value {
    match c {
        Cell::Num(v) if v.is_finite() => json!(v),
        Cell::Num(v) => json!(v.to_string()),
        Cell::Int(v) => json!(v),
        Cell::Text(t) => json!(t),
    }
}

/// Writes one table with the resolved config echoed into the header.
pub fn write_table(
    path: &Path,
    config: &[(String, String)],
    columns: &[&str],
    rows: &[Vec<Cell>],
    format: Format,
) -> Result<(), CliError> {
    let mut buf = Vec::new();
    match format {
        Format::Csv => {
            for (k, v) in config {
                writeln!(buf, "# {k}: {v}").expect("in-memory write");
            }
            writeln!(buf, "{}", columns.join(",")).expect("in-memory write");
            for row in rows {
                let line: Vec<String> = row.iter().map(cell_csv).collect();
                writeln!(buf, "{}", line.join(",")).expect("in-memory write");
            }
        }
        Format::Json => {
            let config_obj: serde_json::Map<String, serde_json::Value> =
                config.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| json!(row.iter().map(cell_json).collect::<Vec<_>>()))
                .collect();
            let doc = json!({
                "config": config_obj,
                "columns": columns,
                "rows": rows_json,
            });
            buf = serde_json::to_vec_pretty(&doc).expect("serializable");
            buf.push(b'\n');
        }
    }
    std::fs::write(path, &buf)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}
