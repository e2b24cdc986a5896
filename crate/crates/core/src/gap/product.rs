use crate::error::{Error, Result};
use crate::linalg::{check_psd, op_norm, psd_factor, psd_sqrt, sym_eigvals, sym_fn, DenseMatrix, Tolerances, SYM_TOL};
#[allow(unused_imports)]
use num_traits::Float;

fn check_pair(a: &DenseMatrix, c: &DenseMatrix) -> Result<()> {
    if !a.is_square() || !c.is_square() || a.rows() != c.rows() {
        return Err(Error::DimensionMismatch("A and C must be square of the same order"));
    }
    a.check_symmetric(SYM_TOL)?;
    c.check_symmetric(SYM_TOL)
}

/// Upper bound for `‖(I + AC)⁻¹‖` with `A`, `C` symmetric PSD.
///
/// Writing `A = LLᵀ` and `C = MMᵀ`, each of `‖A‖^{1/2}‖LᵀC‖`,
/// `‖C‖^{1/2}‖AM‖` and `‖A‖^{1/2}‖C‖^{1/2}‖LᵀM‖` divided by
/// `1 + min σ(AC)` and increased by one bounds the norm; the smallest is
/// returned.
pub fn inv_iplusac_bound(a: &DenseMatrix, c: &DenseMatrix, tol: Tolerances) -> Result<f64> {
    check_pair(a, c)?;
    let l = psd_factor(a, tol)?;
    let m = psd_factor(c, tol)?;
    let na = op_norm(a)?;
    let nc = op_norm(c)?;
    let c_half = psd_sqrt(c, tol)?;
    let s = c_half.matmul(a).matmul(&c_half).symmetrized();
    let min_sigma = sym_eigvals(&s)?.first().copied().unwrap_or(0.0).max(0.0);
    let denom = 1.0 + min_sigma;
    let b1 = 1.0 + na.sqrt() * op_norm(&l.t_matmul(c))? / denom;
    let b2 = 1.0 + nc.sqrt() * op_norm(&a.matmul(&m))? / denom;
    let b3 = 1.0 + (na * nc).sqrt() * op_norm(&l.t_matmul(&m))? / denom;
    Ok(b1.min(b2).min(b3))
}

/// `‖I + AC‖` together with whether `AC` vanishes, the only case in which
/// the norm equals one.
pub fn verify_norm_floor(a: &DenseMatrix, c: &DenseMatrix, tol: Tolerances) -> Result<(f64, bool)> {
    check_pair(a, c)?;
    check_psd(a, tol)?;
    check_psd(c, tol)?;
    let ac = a.matmul(c);
    let norm = op_norm(&(&DenseMatrix::identity(a.rows()) + &ac))?;
    let scale = (op_norm(a)? * op_norm(c)?).max(1.0);
    let vanishes = op_norm(&ac)? <= tol.rank_for(a.rows()) * scale;
    Ok((norm, vanishes))
}

/// `f(AC) = f₀·I + A·C^{1/2}·f₁(C^{1/2}AC^{1/2})·C^{1/2}` where
/// `f(λ) = f₀ + λ·f₁(λ)` on the spectrum.
pub fn func_calc_ac(
    a: &DenseMatrix,
    c: &DenseMatrix,
    f0: f64,
    f1: impl FnMut(f64) -> f64,
    tol: Tolerances,
) -> Result<DenseMatrix> {
    check_pair(a, c)?;
    check_psd(a, tol)?;
    let c_half = psd_sqrt(c, tol)?;
    let s = c_half.matmul(a).matmul(&c_half).symmetrized();
    let g = sym_fn(&s, f1)?;
    let tail = a.matmul(&c_half).matmul(&g).matmul(&c_half);
    Ok(&DenseMatrix::identity(a.rows()).scale(f0) + &tail)
}
