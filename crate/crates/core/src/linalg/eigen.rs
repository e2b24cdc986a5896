use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};

/// Relative symmetry tolerance accepted on input.
pub const SYM_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;
const OFF_TOL: f64 = 1e-14;

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: DenseMatrix,
}

impl EigenDecomposition {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.vectors.column(i)
    }

    /// Rebuilds `V·f(Λ)·Vᵀ`.
    pub fn apply_fn(&self, mut f: impl FnMut(f64) -> f64) -> DenseMatrix {
        let n = self.values.len();
        let fv: Vec<f64> = self.values.iter().map(|&x| f(x)).collect();
        let v = &self.vectors;
        let scaled = DenseMatrix::from_fn(n, n, |i, j| v[(i, j)] * fv[j]);
        scaled.matmul_t(v)
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// The input must be symmetric to `1e-12·‖M‖_F`; it is symmetrized before the
/// sweeps start. Rotations are skipped when the off-diagonal entry is
/// negligible relative to its two diagonal partners, so small eigenvalues of
/// well-scaled definite matrices keep their relative accuracy.
pub fn sym_eig(m: &DenseMatrix) -> Result<EigenDecomposition> {
    jacobi(m, true).map(|(values, vectors)| EigenDecomposition {
        values,
        vectors: vectors.unwrap_or_else(|| DenseMatrix::zeros(0, 0)),
    })
}

/// Eigenvalues only, ascending.
pub fn sym_eigvals(m: &DenseMatrix) -> Result<Vec<f64>> {
    jacobi(m, false).map(|(values, _)| values)
}

fn jacobi(m: &DenseMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<DenseMatrix>)> {
    m.check_symmetric(SYM_TOL)?;
    let n = m.rows();
    let mut a: Vec<f64> = m.symmetrized().as_slice().to_vec();
    let mut v = if want_vectors { Some(DenseMatrix::identity(n)) } else { None };
    let norm = m.frobenius_norm();

    if n > 1 && norm > 0.0 {
        let mut converged = false;
        for _sweep in 0..MAX_SWEEPS {
            if off_norm(&a, n) <= OFF_TOL * norm {
                converged = true;
                break;
            }
            let mut rotated = false;
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let apq = a[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    if apq.abs() <= f64::EPSILON * 0.5 * (app * aqq).abs().sqrt() {
                        a[p * n + q] = 0.0;
                        a[q * n + p] = 0.0;
                        continue;
                    }
                    rotated = true;
                    let theta = (aqq - app) / (2.0 * apq);
                    let t = if theta.abs() > 1e150 {
                        0.5 / theta
                    } else {
                        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                    };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    rotate(&mut a, n, p, q, c, s, t, apq);
                    if let Some(v) = v.as_mut() {
                        for r in 0..n {
                            let vrp = v[(r, p)];
                            let vrq = v[(r, q)];
                            v[(r, p)] = c * vrp - s * vrq;
                            v[(r, q)] = s * vrp + c * vrq;
                        }
                    }
                }
            }
            if !rotated {
                converged = true;
                break;
            }
        }
        if !converged && off_norm(&a, n) > OFF_TOL * norm {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = v.map(|v| v.select_columns(&order));
    Ok((values, vectors))
}

#[allow(clippy::too_many_arguments)]
#[inline]
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64, t: f64, apq: f64) {
    a[p * n + p] -= t * apq;
    a[q * n + q] += t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let np = c * arp - s * arq;
        let nq = s * arp + c * arq;
        a[r * n + p] = np;
        a[p * n + r] = np;
        a[r * n + q] = nq;
        a[q * n + r] = nq;
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_unit_spectrum() {
        let e = sym_eig(&DenseMatrix::identity(3)).unwrap();
        assert_eq!(e.values, [1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_keeps_axes() {
        let e = sym_eig(&DenseMatrix::from_diag(&[2.0, -1.0])).unwrap();
        assert_eq!(e.values, [-1.0, 2.0]);
        assert_eq!(e.vector(0), [0.0, 1.0]);
        assert_eq!(e.vector(1), [1.0, 0.0]);
    }

    #[test]
    fn path_graph_of_three() {
        let a = DenseMatrix::from_rows(&[[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]);
        let e = sym_eigvals(&a).unwrap();
        // roots of λ³ - 2λ
        let r2 = 2f64.sqrt();
        for (got, want) in e.iter().zip([-r2, 0.0, r2]) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn rejects_asymmetric_and_nan() {
        let m = DenseMatrix::from_rows(&[[1.0, 0.0], [1.0, 1.0]]);
        assert!(matches!(sym_eig(&m), Err(Error::NotSymmetric { .. })));
        let m = DenseMatrix::from_rows(&[[1.0, f64::INFINITY], [f64::INFINITY, 1.0]]);
        assert!(matches!(sym_eig(&m), Err(Error::NotFinite)));
    }

    #[test]
    fn apply_fn_reconstructs() {
        let m = DenseMatrix::from_rows(&[[2.0, 1.0, 0.0], [1.0, 3.0, -1.0], [0.0, -1.0, 1.0]]);
        let e = sym_eig(&m).unwrap();
        let back = e.apply_fn(|x| x);
        assert!((&back - &m).max_abs() < 1e-14);
    }
}
