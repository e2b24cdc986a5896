//! Plain-text matrix format: a `rows cols` header followed by one line of
//! whitespace-separated numbers per row. Blank lines and lines starting with
//! `#` are skipped.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::DenseMatrix;
use crate::error::{Error, Result};

/// Meaningful lines of a text, paired with their 1-based line numbers.
pub(crate) struct Lines<'a> {
    inner: core::iter::Enumerate<core::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate(), last: 0 }
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.trim();
            self.last = i + 1;
            if !line.is_empty() && !line.starts_with('#') {
                return Some((i + 1, line));
            }
        }
        None
    }

    pub(crate) fn expect_line(&mut self, reason: &'static str) -> Result<(usize, &'a str)> {
        let eof = self.last + 1;
        self.next_line().ok_or(Error::Parse { line: eof, reason })
    }
}

pub(crate) fn parse_dims(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let bad = Error::Parse { line, reason: "expected `rows cols`" };
    let r = it.next().and_then(|s| s.parse().ok()).ok_or(bad.clone())?;
    let c = it.next().and_then(|s| s.parse().ok()).ok_or(bad.clone())?;
    if it.next().is_some() {
        return Err(bad);
    }
    Ok((r, c))
}

pub(crate) fn read_body(lines: &mut Lines<'_>, rows: usize, cols: usize) -> Result<DenseMatrix> {
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line, text) = lines.expect_line("missing matrix row")?;
        let before = data.len();
        for tok in text.split_whitespace() {
            let v: f64 = tok.parse().map_err(|_| Error::Parse { line, reason: "not a number" })?;
            if !v.is_finite() {
                return Err(Error::Parse { line, reason: "entries must be finite" });
            }
            data.push(v);
        }
        if data.len() - before != cols {
            return Err(Error::Parse { line, reason: "row length differs from the header" });
        }
    }
    DenseMatrix::from_vec(rows, cols, data)
}

pub(crate) fn read_matrix(lines: &mut Lines<'_>) -> Result<DenseMatrix> {
    let (line, header) = lines.expect_line("missing `rows cols` header")?;
    let (r, c) = parse_dims(line, header)?;
    read_body(lines, r, c)
}

/// Parses a single matrix; anything after its last row is an error.
pub fn parse_matrix(text: &str) -> Result<DenseMatrix> {
    let mut lines = Lines::new(text);
    let m = read_matrix(&mut lines)?;
    match lines.next_line() {
        Some((line, _)) => Err(Error::Parse { line, reason: "trailing content after the matrix" }),
        None => Ok(m),
    }
}

/// Writes a matrix in the text format with round-trip exact entries.
pub fn format_matrix(m: &DenseMatrix) -> String {
    let mut out = String::new();
    write_matrix(&mut out, m);
    out
}

pub(crate) fn write_matrix(out: &mut String, m: &DenseMatrix) {
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| alloc::format!("{v:e}")).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}
