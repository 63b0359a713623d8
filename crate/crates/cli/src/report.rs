use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use serde_json::{Map, Value};

/// One table cell. Reals are printed with 15 significant digits.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_real(*v),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            // Round-tripping through the printed form keeps CSV and JSON in step.
            Cell::Real(v) => format_real(*v)
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> io::Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.columns)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::render))?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self, config: &impl Serialize) -> serde_json::Result<String> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| (name.to_string(), cell.to_json()))
                    .collect();
                Value::Object(object)
            })
            .collect();
        let mut document = Map::new();
        document.insert("config".into(), serde_json::to_value(config)?);
        document.insert("rows".into(), Value::Array(rows));
        let mut text = serde_json::to_string_pretty(&Value::Object(document))?;
        text.push('\n');
        Ok(text)
    }

    /// Field-by-field comparison against a CSV produced earlier. Returns one
    /// message per difference; empty means the file matches.
    pub fn diff_csv(&self, text: &str) -> Result<Vec<String>, csv::Error> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut diffs = Vec::new();
        let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
        if header != self.columns {
            diffs.push(format!("header: expected {:?}, found {:?}", self.columns, header));
            return Ok(diffs);
        }
        let mut count = 0;
        for (index, record) in reader.records().enumerate() {
            let record = record?;
            count += 1;
            let Some(expected) = self.rows.get(index) else {
                continue;
            };
            for ((name, cell), found) in self.columns.iter().zip(expected).zip(record.iter()) {
                if !cell_matches(cell, found) {
                    diffs.push(format!(
                        "row {} column {name}: expected {}, found {found}",
                        index + 1,
                        cell.render()
                    ));
                }
            }
        }
        if count != self.rows.len() {
            diffs.push(format!("row count: expected {}, found {count}", self.rows.len()));
        }
        Ok(diffs)
    }
}

fn cell_matches(cell: &Cell, found: &str) -> bool {
    match cell {
        Cell::Real(v) => match found.parse::<f64>() {
            // The file holds 15 digits; compare at that resolution.
            Ok(f) if v.is_finite() && f.is_finite() => (f - v).abs() <= 1e-14 * v.abs().max(f.abs()),
            Ok(f) => format_real(f) == format_real(*v),
            Err(_) => false,
        },
        other => other.render() == found,
    }
}

/// C's `%.15g`: 15 significant digits, trailing zeros dropped, exponent
/// form outside `1e-4 ≤ |x| < 1e15`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let scientific = format!("{x:.14e}");
    let (mantissa, exponent) = scientific.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-4..15).contains(&exponent) {
        let decimals = (14 - exponent) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let mut out = trim_zeros(mantissa.to_string());
        let sign = if exponent < 0 { '-' } else { '+' };
        let _ = write!(out, "e{sign}{:02}", exponent.abs());
        out
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
