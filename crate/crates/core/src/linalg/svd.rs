use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use super::matrix::{dot, norm2, DenseMatrix};
use super::Tolerances;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 80;

/// Thin singular value decomposition `M = left · diag(s) · rightᵀ`.
///
/// With `M` of shape `r × c` and `p = min(r, c)`, `left` is `r × p`,
/// `right` is `c × p` and the singular values are sorted descending.
#[derive(Debug, Clone)]
pub struct SingularDecomposition {
    pub singular_values: Vec<f64>,
    pub left: DenseMatrix,
    pub right: DenseMatrix,
}

impl SingularDecomposition {
    pub fn max(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    pub fn min(&self) -> f64 {
        self.singular_values.last().copied().unwrap_or(0.0)
    }

    pub fn reconstruct(&self) -> DenseMatrix {
        let s = &self.singular_values;
        let us = DenseMatrix::from_fn(self.left.rows(), s.len(), |i, j| self.left[(i, j)] * s[j]);
        us.matmul_t(&self.right)
    }
}

/// Singular value decomposition by one-sided (Hestenes) Jacobi.
pub fn svd(m: &DenseMatrix) -> Result<SingularDecomposition> {
    m.ensure_finite()?;
    if m.rows() < m.cols() {
        let t = svd(&m.transpose())?;
        return Ok(SingularDecomposition { singular_values: t.singular_values, left: t.right, right: t.left });
    }
    let (r, c) = (m.rows(), m.cols());
    let scale = m.max_abs();
    let mut cols = columns_of(m, if scale > 0.0 { 1.0 / scale } else { 1.0 });
    let mut v: Vec<Vec<f64>> = (0..c).map(|j| unit(c, j)).collect();
    hestenes(&mut cols, Some(&mut v))?;

    let mut sigma: Vec<f64> = cols.iter().map(|u| norm2(u)).collect();
    let order = descending(&sigma);
    let mut left: Vec<Vec<f64>> = Vec::with_capacity(c);
    let mut right: Vec<Vec<f64>> = Vec::with_capacity(c);
    let mut missing = 0;
    for &j in &order {
        right.push(core::mem::take(&mut v[j]));
        if sigma[j] > 0.0 {
            let s = sigma[j];
            left.push(cols[j].iter().map(|x| x / s).collect());
        } else {
            missing += 1;
        }
    }
    left.extend(complete_basis(&left, r, missing));
    sigma = order.iter().map(|&j| sigma[j] * scale).collect();
    Ok(SingularDecomposition {
        singular_values: sigma,
        left: DenseMatrix::from_columns(r, &left),
        right: DenseMatrix::from_columns(c, &right),
    })
}

/// Singular values only, descending.
pub fn singular_values(m: &DenseMatrix) -> Result<Vec<f64>> {
    m.ensure_finite()?;
    let src = if m.rows() < m.cols() { m.transpose() } else { m.clone() };
    let scale = src.max_abs();
    let mut cols = columns_of(&src, if scale > 0.0 { 1.0 / scale } else { 1.0 });
    hestenes(&mut cols, None)?;
    let mut s: Vec<f64> = cols.iter().map(|u| norm2(u) * scale).collect();
    s.sort_by(|a, b| b.total_cmp(a));
    Ok(s)
}

/// Spectral norm, the largest singular value.
pub fn op_norm(m: &DenseMatrix) -> Result<f64> {
    Ok(singular_values(m)?.first().copied().unwrap_or(0.0))
}

/// Orthonormal basis of `{x : ‖Mx‖ ≤ tol_rank·‖M‖·‖x‖}` as columns.
///
/// The result has zero columns when the null space is trivial.
pub fn null_space_basis(m: &DenseMatrix, tol_rank: f64) -> Result<DenseMatrix> {
    m.ensure_finite()?;
    let c = m.cols();
    if m.rows() >= c {
        let d = svd(m)?;
        let cut = tol_rank * d.max();
        let idx: Vec<usize> = (0..c).filter(|&j| d.singular_values[j] <= cut).collect();
        Ok(d.right.select_columns(&idx))
    } else {
        let d = svd(m)?;
        let cut = tol_rank * d.max();
        let kept: Vec<Vec<f64>> =
            (0..d.singular_values.len()).filter(|&j| d.singular_values[j] > cut).map(|j| d.right.column(j)).collect();
        let null = complete_basis(&kept, c, c - kept.len());
        Ok(DenseMatrix::from_columns(c, &null))
    }
}

/// Default rank tolerance `n·2⁻⁵²` for an `r × c` matrix.
pub fn default_rank_tol(m: &DenseMatrix) -> f64 {
    m.rows().max(m.cols()) as f64 * f64::EPSILON
}

/// Numerical rank: singular values above `tol_rank·‖M‖`.
pub fn rank(m: &DenseMatrix, tol_rank: f64) -> Result<usize> {
    let s = singular_values(m)?;
    let cut = tol_rank * s.first().copied().unwrap_or(0.0);
    Ok(s.iter().filter(|&&x| x > cut && x > 0.0).count())
}

/// Polar decomposition `B = U·P` with `U` orthogonal and `P = √(BᵀB)`.
pub fn polar_factors(b: &DenseMatrix, tol: Tolerances) -> Result<(DenseMatrix, DenseMatrix)> {
    if !b.is_square() {
        return Err(Error::DimensionMismatch("polar factors need a square matrix"));
    }
    let d = svd(b)?;
    if b.rows() > 0 && d.min() <= tol.rank_for(b.rows()) * d.max() {
        return Err(Error::Singular);
    }
    let u = d.left.matmul_t(&d.right);
    let s = &d.singular_values;
    let vs = DenseMatrix::from_fn(b.rows(), s.len(), |i, j| d.right[(i, j)] * s[j]);
    let p = vs.matmul_t(&d.right).symmetrized();
    Ok((u, p))
}

fn columns_of(m: &DenseMatrix, s: f64) -> Vec<Vec<f64>> {
    (0..m.cols()).map(|j| (0..m.rows()).map(|i| m[(i, j)] * s).collect()).collect()
}

fn unit(n: usize, j: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[j] = 1.0;
    e
}

fn descending(s: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| s[b].total_cmp(&s[a]));
    order
}

fn hestenes(cols: &mut [Vec<f64>], mut v: Option<&mut Vec<Vec<f64>>>) -> Result<()> {
    let c = cols.len();
    let tol = cols.first().map_or(1, Vec::len).max(1) as f64 * f64::EPSILON;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..c {
            for q in p + 1..c {
                let alpha = dot(&cols[p], &cols[p]);
                let beta = dot(&cols[q], &cols[q]);
                let gamma = dot(&cols[p], &cols[q]);
                if gamma == 0.0 || gamma.abs() <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                rotate_pair(cols, p, q, cs, sn);
                if let Some(v) = v.as_deref_mut() {
                    rotate_pair(v, p, q, cs, sn);
                }
            }
        }
        if !rotated {
            return Ok(());
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, cs: f64, sn: f64) {
    let (lo, hi) = cols.split_at_mut(q);
    for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
        let a = *x;
        let b = *y;
        *x = cs * a - sn * b;
        *y = sn * a + cs * b;
    }
}

/// Extends orthonormal `existing` (vectors of length `n`) by `count` further
/// orthonormal vectors, drawn from the coordinate axes by Gram–Schmidt.
pub(crate) fn complete_basis(existing: &[Vec<f64>], n: usize, count: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = existing.to_vec();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut best: Option<Vec<f64>> = None;
        let mut best_norm = 0.0;
        for j in 0..n {
            let mut x = unit(n, j);
            for _ in 0..2 {
                for b in &basis {
                    let h = dot(b, &x);
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi -= h * bi;
                    }
                }
            }
            let nx = norm2(&x);
            if nx > best_norm {
                best_norm = nx;
                best = Some(x);
            }
        }
        match best {
            Some(mut x) if best_norm > 1e-8 => {
                for xi in &mut x {
                    *xi /= best_norm;
                }
                basis.push(x.clone());
                out.push(x);
            }
            _ => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_orthonormal(m: &DenseMatrix) {
        let g = m.t_matmul(m);
        let e = &g - &DenseMatrix::identity(m.cols());
        assert!(e.max_abs() < 1e-13, "not orthonormal: {:?}", g);
    }

    #[test]
    fn zero_matrix_norm() {
        assert_eq!(op_norm(&DenseMatrix::zeros(3, 2)).unwrap(), 0.0);
    }

    #[test]
    fn diagonal_norm() {
        let m = DenseMatrix::from_rows(&[[3.0, 0.0], [0.0, -4.0]]);
        assert!((op_norm(&m).unwrap() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn rectangular_reconstruction() {
        for (r, c) in [(5, 3), (3, 5), (4, 4), (1, 3)] {
            let m = DenseMatrix::from_fn(r, c, |i, j| ((i * 7 + j * 3) % 5) as f64 - 2.0 + 0.1 * j as f64);
            let d = svd(&m).unwrap();
            assert_eq!(d.singular_values.len(), r.min(c));
            assert!((&d.reconstruct() - &m).max_abs() < 1e-13);
            assert_orthonormal(&d.left);
            assert_orthonormal(&d.right);
            assert!(d.singular_values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn rank_deficient_left_vectors_complete() {
        let m = DenseMatrix::from_rows(&[[1.0, 1.0], [1.0, 1.0], [0.0, 0.0]]);
        let d = svd(&m).unwrap();
        assert!(d.min().abs() < 1e-15);
        assert_orthonormal(&d.left);
        assert!((&d.reconstruct() - &m).max_abs() < 1e-14);
    }

    #[test]
    fn null_spaces() {
        assert_eq!(null_space_basis(&DenseMatrix::identity(3), 1e-14).unwrap().cols(), 0);
        assert_eq!(null_space_basis(&DenseMatrix::zeros(3, 3), 1e-14).unwrap().cols(), 3);
        let n = null_space_basis(&DenseMatrix::from_diag(&[1.0, 0.0]), 1e-14).unwrap();
        assert_eq!(n.cols(), 1);
        assert!((n[(1, 0)].abs() - 1.0).abs() < 1e-15 && n[(0, 0)] == 0.0);
        // wide matrix: null space of a 1 × 3 row
        let w = DenseMatrix::from_rows(&[[1.0, 2.0, 2.0]]);
        let n = null_space_basis(&w, 1e-14).unwrap();
        assert_eq!(n.cols(), 2);
        assert_orthonormal(&n);
        assert!(w.matmul(&n).max_abs() < 1e-14);
    }

    #[test]
    fn polar_of_diagonal() {
        let b = DenseMatrix::from_diag(&[2.0, -3.0]);
        let (u, p) = polar_factors(&b, Tolerances::default()).unwrap();
        assert!((&u - &DenseMatrix::from_diag(&[1.0, -1.0])).max_abs() < 1e-15);
        assert!((&p - &DenseMatrix::from_diag(&[2.0, 3.0])).max_abs() < 1e-15);
    }

    #[test]
    fn polar_of_orthogonal() {
        let (c, s) = (0.6, 0.8);
        let q = DenseMatrix::from_rows(&[[c, -s], [s, c]]);
        let (u, p) = polar_factors(&q, Tolerances::default()).unwrap();
        assert!((&u - &q).max_abs() < 1e-15);
        assert!((&p - &DenseMatrix::identity(2)).max_abs() < 1e-15);
    }

    #[test]
    fn polar_rejects_singular() {
        let b = DenseMatrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        assert!(matches!(polar_factors(&b, Tolerances::default()), Err(Error::Singular)));
    }
}
