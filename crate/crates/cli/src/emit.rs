//! Report serialization and atomic output.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use demazure::rational::{format_rational, Rational};
use demazure::weyl::format_word;
use demazure::{RatWeight, Weight};

use crate::args::{Format, OutputArgs};
use crate::error::CliResult;

/// Rows for the CSV form of a report.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// 1-based word, `"e"` for the identity.
pub fn word_str(word: &[usize]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        format_word(word)
    }
}

pub fn rat_str(q: &Rational) -> String {
    format_rational(q)
}

pub fn rat_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

pub fn weight_csv(w: &Weight) -> String {
    w.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub fn rat_weight_csv(w: &RatWeight) -> String {
    rat_vec(&w.0).join(",")
}

pub fn render(format: Format, json: &impl Serialize, table: Table) -> CliResult<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(json)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.header)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
            w.into_inner().map_err(|e| std::io::Error::other(e.to_string()).into())
        }
    }
}

/// Writes `bytes` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> CliResult<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn emit(out: &OutputArgs, default: Format, json: &impl Serialize, table: Table) -> CliResult<()> {
    let bytes = render(out.format.unwrap_or(default), json, table)?;
    match &out.output {
        Some(path) => write_atomic(path, &bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
