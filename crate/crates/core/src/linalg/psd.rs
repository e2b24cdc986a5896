use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use super::eigen::{sym_eig, sym_eigvals, EigenDecomposition, SYM_TOL};
use super::matrix::DenseMatrix;
use super::Tolerances;
use crate::error::{Error, Result};

/// Eigendecomposes `m` and checks that no eigenvalue lies below
/// `-tol.psd·‖M‖`.
pub fn check_psd(m: &DenseMatrix, tol: Tolerances) -> Result<EigenDecomposition> {
    let e = sym_eig(m)?;
    let norm = spectral_radius(&e.values);
    if let Some(&lo) = e.values.first() {
        if lo < -tol.psd * norm {
            return Err(Error::NotPsd { min_eig: lo });
        }
    }
    Ok(e)
}

/// Symmetric PSD square root; slightly negative eigenvalues are clipped to zero.
pub fn psd_sqrt(m: &DenseMatrix, tol: Tolerances) -> Result<DenseMatrix> {
    let e = check_psd(m, tol)?;
    Ok(e.apply_fn(|x| x.max(0.0).sqrt()).symmetrized())
}

/// Factor `L` with `L·Lᵀ = M` and one column per eigenvalue above the rank
/// threshold, largest first.
pub fn psd_factor(m: &DenseMatrix, tol: Tolerances) -> Result<DenseMatrix> {
    let e = check_psd(m, tol)?;
    let n = m.rows();
    let cut = tol.rank_for(n) * spectral_radius(&e.values);
    let keep: Vec<usize> = (0..n).rev().filter(|&i| e.values[i] > cut).collect();
    Ok(DenseMatrix::from_fn(n, keep.len(), |i, j| {
        let k = keep[j];
        e.vectors[(i, k)] * e.values[k].sqrt()
    }))
}

/// `f(M)` for symmetric `M` through its eigendecomposition.
pub fn sym_fn(m: &DenseMatrix, f: impl FnMut(f64) -> f64) -> Result<DenseMatrix> {
    Ok(sym_eig(m)?.apply_fn(f).symmetrized())
}

/// Singular values of the complex matrix `A - iB` for symmetric `A`, `B`,
/// descending.
///
/// They are read off the real symmetric embedding `[[A, B], [B, -A]]`, whose
/// eigenvalues are exactly `±sᵢ`.
pub fn complex_svd_via_embedding(a: &DenseMatrix, b: &DenseMatrix) -> Result<Vec<f64>> {
    a.check_symmetric(SYM_TOL)?;
    b.check_symmetric(SYM_TOL)?;
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch("A and B must have the same order"));
    }
    let n = a.rows();
    let h = DenseMatrix::from_blocks(a, b, b, &a.scale(-1.0));
    let ev = sym_eigvals(&h)?;
    Ok(ev[n..].iter().rev().map(|&x| x.max(0.0)).collect())
}

pub(crate) fn spectral_radius(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m: f64, x| m.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerances = Tolerances { rank: None, psd: 1e-10 };

    #[test]
    fn sqrt_of_diagonal() {
        let s = psd_sqrt(&DenseMatrix::from_diag(&[4.0, 9.0]), TOL).unwrap();
        assert!((&s - &DenseMatrix::from_diag(&[2.0, 3.0])).max_abs() < 1e-15);
        let i = psd_sqrt(&DenseMatrix::identity(3), TOL).unwrap();
        assert_eq!(i, DenseMatrix::identity(3));
    }

    #[test]
    fn sqrt_squares_back() {
        let m = DenseMatrix::from_rows(&[[2.0, 1.0], [1.0, 2.0]]);
        let s = psd_sqrt(&m, TOL).unwrap();
        assert!((&s.matmul(&s) - &m).max_abs() < 1e-12);
    }

    #[test]
    fn sqrt_rejects_indefinite() {
        let m = DenseMatrix::from_diag(&[1.0, -0.5]);
        assert!(matches!(psd_sqrt(&m, TOL), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn sqrt_clips_roundoff() {
        let m = DenseMatrix::from_diag(&[1.0, -1e-14]);
        let s = psd_sqrt(&m, TOL).unwrap();
        assert_eq!(s[(1, 1)], 0.0);
    }

    #[test]
    fn factor_drops_null_directions() {
        let l = psd_factor(&DenseMatrix::from_diag(&[4.0, 0.0]), TOL).unwrap();
        assert_eq!((l.rows(), l.cols()), (2, 1));
        assert!((l[(0, 0)].abs() - 2.0).abs() < 1e-15 && l[(1, 0)] == 0.0);
        let l = psd_factor(&DenseMatrix::identity(2), TOL).unwrap();
        assert!((&l.matmul_t(&l) - &DenseMatrix::identity(2)).max_abs() < 1e-15);
    }

    #[test]
    fn embedding_examples() {
        let i2 = DenseMatrix::identity(2);
        let z2 = DenseMatrix::zeros(2, 2);
        assert_eq!(complex_svd_via_embedding(&i2, &z2).unwrap(), [1.0, 1.0]);
        let s = complex_svd_via_embedding(&z2, &i2).unwrap();
        assert!(s.iter().all(|x| (x - 1.0).abs() < 1e-15));
        let one = DenseMatrix::identity(1);
        let s = complex_svd_via_embedding(&one, &one).unwrap();
        assert!((s[0] - 2f64.sqrt()).abs() < 1e-15);
    }
}
