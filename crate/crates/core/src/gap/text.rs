use alloc::string::String;

use super::BlockSaddle;
use crate::error::{Error, Result};
use crate::linalg::{parse_dims, read_body, read_matrix, write_matrix, DenseMatrix, Lines, Tolerances};

/// The three blocks of a block-saddle file, before any validation beyond
/// syntax.
#[derive(Debug, Clone, PartialEq)]
pub struct SaddleBlocks {
    pub a: DenseMatrix,
    pub b: DenseMatrix,
    pub c: DenseMatrix,
}

impl SaddleBlocks {
    pub fn into_saddle(self, tol: Tolerances) -> Result<BlockSaddle> {
        BlockSaddle::with_tolerances(self.a, self.b, self.c, tol)
    }
}

fn expect_header(lines: &mut Lines<'_>, name: &'static str, reason: &'static str) -> Result<()> {
    let (line, text) = lines.expect_line(reason)?;
    if text == name {
        Ok(())
    } else {
        Err(Error::Parse { line, reason })
    }
}

/// A square block, either in the plain-text matrix format or as `zero n`.
fn read_square_block(lines: &mut Lines<'_>, missing: &'static str) -> Result<DenseMatrix> {
    let (line, spec) = lines.expect_line(missing)?;
    match spec.strip_prefix("zero") {
        Some(rest) if rest.starts_with(char::is_whitespace) => {
            let n = rest.trim().parse().map_err(|_| Error::Parse { line, reason: "expected `zero n`" })?;
            Ok(DenseMatrix::zeros(n, n))
        }
        _ => {
            let (r, c) = parse_dims(line, spec)?;
            read_body(lines, r, c)
        }
    }
}

/// Parses sections headed `A`, `B` and `C`, each followed by a matrix in the
/// plain-text format. `A` and `C` may be written as `zero n`.
pub fn parse_saddle(text: &str) -> Result<SaddleBlocks> {
    let mut lines = Lines::new(text);
    expect_header(&mut lines, "A", "expected section header `A`")?;
    let a = read_square_block(&mut lines, "missing `A` matrix")?;
    expect_header(&mut lines, "B", "expected section header `B`")?;
    let b = read_matrix(&mut lines)?;
    expect_header(&mut lines, "C", "expected section header `C`")?;
    let c = read_square_block(&mut lines, "missing `C` matrix")?;
    if let Some((line, _)) = lines.next_line() {
        return Err(Error::Parse { line, reason: "trailing content after section `C`" });
    }
    Ok(SaddleBlocks { a, b, c })
}

pub fn format_saddle(h: &BlockSaddle) -> String {
    let mut out = String::new();
    for (name, block) in [("A", h.a()), ("B", h.b()), ("C", h.c())] {
        out.push_str(name);
        out.push('\n');
        if name != "B" && block.max_abs() == 0.0 {
            out.push_str(&alloc::format!("zero {}\n", block.rows()));
        } else {
            write_matrix(&mut out, block);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stokes_file() {
        let s = parse_saddle("A\n1 1\n1\n# coupling\nB\n1 2\n1 0.5\nC\nzero 2\n").unwrap();
        assert_eq!(s.c, DenseMatrix::zeros(2, 2));
        let h = s.into_saddle(Tolerances::default()).unwrap();
        assert_eq!(h.k(), 2);
        assert_eq!(parse_saddle(&format_saddle(&h)).unwrap().into_saddle(Tolerances::default()).unwrap(), h);
    }

    #[test]
    fn explicit_c_round_trip() {
        let h = BlockSaddle::new(
            DenseMatrix::from_rows(&[[2.0, -1.0], [-1.0, 2.0]]),
            DenseMatrix::identity(2),
            DenseMatrix::from_diag(&[1.0, 0.25]),
        )
        .unwrap();
        let back = parse_saddle(&format_saddle(&h)).unwrap();
        assert_eq!(back.into_saddle(h.tolerances()).unwrap(), h);
    }

    #[test]
    fn zero_a_block() {
        let s = parse_saddle("A\nzero 2\nB\n2 1\n1\n-1\nC\n1 1\n3\n").unwrap();
        assert_eq!(s.a, DenseMatrix::zeros(2, 2));
        let h = s.into_saddle(Tolerances::default()).unwrap();
        assert!(format_saddle(&h).starts_with("A\nzero 2\n"));
    }

    #[test]
    fn malformed_sections() {
        assert!(matches!(parse_saddle("B\n1 1\n1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_saddle("A\n1 1\n1\nB\n1 1\n1\nC\nzero x\n"), Err(Error::Parse { line: 8, .. })));
        assert!(matches!(parse_saddle("A\n1 1\n1\nB\n1 1\n1\n"), Err(Error::Parse { line: 7, .. })));
        assert!(matches!(parse_saddle("A\n1 1\n1\nB\n1 1\n1\nC\nzero 1\nD\n"), Err(Error::Parse { line: 9, .. })));
    }
}
