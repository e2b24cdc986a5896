use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::args::Format;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    /// Not applicable: an empty CSV field, `null` in JSON.
    Empty,
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Float)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => number(*v),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

/// 17 significant digits in scientific notation.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// A JSON number, or `null` for values JSON cannot represent.
pub fn number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

pub fn numbers(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| number(x)).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn write_csv(&self, out: &mut String) {
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }

    fn to_json(&self) -> Value {
        let rows = self.rows.iter().map(|row| {
            let obj: Map<String, Value> =
                self.header.iter().zip(row).map(|(h, c)| ((*h).to_owned(), c.json())).collect();
            Value::Object(obj)
        });
        Value::Array(rows.collect())
    }
}

/// What a command produces, before a format is chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Json(Value),
    Table(Table),
    /// Named tables, written as `# name` blocks in CSV.
    Sections(Vec<(&'static str, Table)>),
}

impl Output {
    fn default_format(&self) -> Format {
        match self {
            Output::Json(_) => Format::Json,
            Output::Table(_) | Output::Sections(_) => Format::Csv,
        }
    }

    pub fn render(&self, format: Option<Format>) -> CliResult<String> {
        let format = format.unwrap_or_else(|| self.default_format());
        let mut out = String::new();
        match (self, format) {
            (Output::Json(v), Format::Json) => out = pretty(v),
            (Output::Json(_), Format::Csv) => {
                return Err(CliError::Argument("this command has no CSV output".into()));
            }
            (Output::Table(t), Format::Csv) => t.write_csv(&mut out),
            (Output::Table(t), Format::Json) => out = pretty(&t.to_json()),
            (Output::Sections(s), Format::Csv) => {
                for (i, (name, t)) in s.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    let _ = writeln!(out, "# {name}");
                    t.write_csv(&mut out);
                }
            }
            (Output::Sections(s), Format::Json) => {
                let obj: Map<String, Value> = s.iter().map(|(n, t)| ((*n).to_owned(), t.to_json())).collect();
                out = pretty(&Value::Object(obj));
            }
        }
        Ok(out)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
