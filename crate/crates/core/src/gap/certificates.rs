use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{BlockSaddle, Claim, GapCertificate, Method};
use crate::error::{Error, Result};
use crate::linalg::{
    check_psd, null_space_basis, op_norm, singular_values, solve, svd, sym_eig, DenseMatrix, Tolerances, SYM_TOL,
};

/// Orthonormal bases of `N(A) ∩ N(Bᵀ)` and `N(C) ∩ N(B)`.
///
/// `ker H` is their direct sum, embedded in the first and second block
/// coordinates respectively.
#[derive(Debug, Clone)]
pub struct NullSpaceReport {
    pub na_nb: DenseMatrix,
    pub nc_nb: DenseMatrix,
}

impl NullSpaceReport {
    /// `H` is singular exactly when either basis is nonempty.
    pub fn singular(&self) -> bool {
        self.dim() > 0
    }

    pub fn dim(&self) -> usize {
        self.na_nb.cols() + self.nc_nb.cols()
    }

    /// Basis of `ker H` as columns of an `(m + k) × dim` matrix.
    pub fn kernel_basis(&self) -> DenseMatrix {
        let (m, k) = (self.na_nb.rows(), self.nc_nb.rows());
        let (p, q) = (self.na_nb.cols(), self.nc_nb.cols());
        let mut out = DenseMatrix::zeros(m + k, p + q);
        out.set_block(0, 0, &self.na_nb);
        out.set_block(m, p, &self.nc_nb);
        out
    }
}

pub fn null_space_h(h: &BlockSaddle) -> Result<NullSpaceReport> {
    let (m, k) = (h.m(), h.k());
    let tol = h.rank_tol();
    let mut upper = DenseMatrix::zeros(m + k, m);
    upper.set_block(0, 0, h.a());
    upper.set_block(m, 0, &h.b().transpose());
    let mut lower = DenseMatrix::zeros(k + m, k);
    lower.set_block(0, 0, h.c());
    lower.set_block(k, 0, h.b());
    Ok(NullSpaceReport { na_nb: null_space_basis(&upper, tol)?, nc_nb: null_space_basis(&lower, tol)? })
}

fn definite_min_eig(x: &DenseMatrix, block: &'static str, tol: f64) -> Result<f64> {
    let e = sym_eig(x)?;
    let radius = e.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let min = e.values[0];
    if min > 0.0 && min > tol * radius {
        Ok(min)
    } else {
        Err(Error::NotDefinite { block, min_eig: min })
    }
}

/// `σ(H) ∩ (-λmin(C), λmin(A)) = ∅` for positive definite `A` and `C`.
pub fn diag_gap(h: &BlockSaddle) -> Result<GapCertificate> {
    let tol = h.rank_tol();
    let a = definite_min_eig(h.a(), "A", tol)?;
    let c = definite_min_eig(h.c(), "C", tol)?;
    Ok(GapCertificate::new(Method::DiagGap, -c, a, Claim::Empty)
        .bound(1.0 / a.min(c))
        .with("min_eig_a", a)
        .with("min_eig_c", c))
}

/// Gap around the shift `λ₀ = (λmin(A) - λmin(C))/2`, widened by the
/// smallest singular value of the normalized coupling block.
pub fn stretch_certificate(h: &BlockSaddle) -> Result<GapCertificate> {
    let tol = h.rank_tol();
    let a = definite_min_eig(h.a(), "A", tol)?;
    let c = definite_min_eig(h.c(), "C", tol)?;
    let lambda0 = 0.5 * (a - c);
    let ea = sym_eig(h.a())?.apply_fn(|x| 1.0 / (x - lambda0).max(0.5 * (a + c)).sqrt());
    let ec = sym_eig(h.c())?.apply_fn(|x| 1.0 / (x + lambda0).max(0.5 * (a + c)).sqrt());
    let z = ea.matmul(h.b()).matmul(&ec);
    let z_min = if h.m() == h.k() { singular_values(&z)?.last().copied().unwrap_or(0.0) } else { 0.0 };
    let factor = (1.0 + z_min * z_min).sqrt();
    let radius = 0.5 * (a + c) * factor;
    let (lo, hi) = (lambda0 - radius, lambda0 + radius);
    Ok(GapCertificate::new(Method::Stretch, lo, hi, Claim::Empty)
        .bound(1.0 / hi.min(-lo))
        .with("lambda0", lambda0)
        .with("min_eig_a", a)
        .with("min_eig_c", c)
        .with("z_sigma_min", z_min)
        .with("stretch_factor", factor)
        .with("resolvent_bound", 1.0 / radius))
}

/// `α = ‖(BBᵀ)^{-1/4} A (BBᵀ)^{-1/4}‖` and `γ = ‖(BᵀB)^{-1/4} C (BᵀB)^{-1/4}‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeBounds {
    pub alpha: f64,
    pub gamma: f64,
}

/// `‖(BBᵀ)^{-1/4} X (BBᵀ)^{-1/4}‖`, finite only when `B` has full row rank.
pub(crate) fn relative_norm(x: &DenseMatrix, b: &DenseMatrix, tol: f64) -> Result<f64> {
    let m = b.rows();
    if b.cols() < m {
        return Err(Error::UnboundedRelativeBound);
    }
    let d = svd(b)?;
    if !(d.min() > tol * d.max()) {
        return Err(Error::UnboundedRelativeBound);
    }
    let w = DenseMatrix::from_fn(m, m, |i, j| {
        (0..m).map(|l| d.left[(i, l)] * d.left[(j, l)] / d.singular_values[l].sqrt()).sum()
    });
    let e = sym_eig(&w.matmul(x).matmul(&w).symmetrized())?;
    Ok(e.values.last().copied().unwrap_or(0.0).max(0.0))
}

pub fn relative_bounds(h: &BlockSaddle) -> Result<RelativeBounds> {
    let tol = h.rank_tol();
    Ok(RelativeBounds {
        alpha: relative_norm(h.a(), h.b(), tol)?,
        gamma: relative_norm(h.c(), &h.b().transpose(), tol)?,
    })
}

fn inverse_norm_square(b: &DenseMatrix, tol: f64) -> Result<f64> {
    if !b.is_square() {
        return Err(Error::BNotInvertible);
    }
    let s = singular_values(b)?;
    let (max, min) = (s[0], s[s.len() - 1]);
    if min > 0.0 && min > tol * max {
        Ok(1.0 / min)
    } else {
        Err(Error::BNotInvertible)
    }
}

/// `‖H⁻¹‖ ≤ ‖B⁻¹‖(1 + max(α, γ) + αγ)` for square invertible `B`.
pub fn hbinv_certificate(h: &BlockSaddle) -> Result<GapCertificate> {
    let b_inv = inverse_norm_square(h.b(), h.rank_tol())?;
    let rb = relative_bounds(h)?;
    let bound = hbinv_scaled_bound(&rb, b_inv, 1.0)?;
    Ok(GapCertificate::symmetric(Method::HbInv, 1.0 / bound, Claim::Empty)
        .bound(bound)
        .with("alpha", rb.alpha)
        .with("gamma", rb.gamma)
        .with("b_inv_norm", b_inv))
}

/// The inverse bound for `B` replaced by `t·B`, in terms of the `t = 1`
/// quantities.
pub fn hbinv_scaled_bound(rb: &RelativeBounds, b_inv_norm: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidParameter("scaling t must be positive"));
    }
    let (a, g) = (rb.alpha, rb.gamma);
    Ok(b_inv_norm / t * (1.0 + a.max(g) / t + a * g / (t * t)))
}

struct Split {
    range: DenseMatrix,
    null: DenseMatrix,
    range_min: f64,
}

fn split_psd(x: &DenseMatrix, tol: Tolerances, rank_tol: f64) -> Result<Split> {
    let e = check_psd(x, tol)?;
    let n = x.rows();
    let radius = e.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let cut = rank_tol * radius;
    let null: Vec<usize> = (0..n).filter(|&i| !(e.values[i] > cut && e.values[i] > 0.0)).collect();
    let range: Vec<usize> = (0..n).filter(|i| !null.contains(i)).collect();
    let range_min = range.first().map_or(f64::INFINITY, |&i| e.values[i]);
    Ok(Split { range: e.vectors.select_columns(&range), null: e.vectors.select_columns(&null), range_min })
}

/// Certificate for semidefinite `A` and `C` with `dim N(A) = dim N(C)` and
/// `B` invertible between the two null spaces.
pub fn zero_dichotomy_certificate(h: &BlockSaddle) -> Result<GapCertificate> {
    let rank_tol = h.rank_tol();
    let sa = split_psd(h.a(), h.tolerances(), rank_tol)?;
    let sc = split_psd(h.c(), h.tolerances(), rank_tol)?;
    let d = sa.null.cols();
    if d != sc.null.cols() {
        return Err(Error::DimensionMismatch("dim N(A) must equal dim N(C)"));
    }
    let b = h.b();
    let mut norms: Vec<f64> = Vec::new();
    if sa.range.cols() > 0 {
        norms.push(1.0 / sa.range_min);
    }
    if sc.range.cols() > 0 {
        norms.push(1.0 / sc.range_min);
    }
    let mut coupling = 0.0f64;
    let mut b22_inv_norm = 0.0;
    if d > 0 {
        let b22 = sa.null.t_matmul(b).matmul(&sc.null);
        let s22 = singular_values(&b22)?;
        let b_norm = op_norm(b)?;
        let min = s22[d - 1];
        if !(min > 0.0 && min > rank_tol * b_norm) {
            return Err(Error::B22Singular);
        }
        b22_inv_norm = 1.0 / min;
        norms.push(b22_inv_norm);
        let b12 = sa.range.t_matmul(b).matmul(&sc.null);
        let b21 = sa.null.t_matmul(b).matmul(&sc.range);
        if b12.rows() > 0 {
            let x = solve(&b22.transpose(), &b12.transpose())?;
            coupling = coupling.max(op_norm(&x)?);
        }
        if b21.cols() > 0 {
            let y = solve(&b22, &b21)?;
            coupling = coupling.max(op_norm(&y)?);
        }
    }
    let worst = norms.iter().fold(0.0f64, |m, &v| m.max(v));
    let eps = 1.0 / ((1.0 + coupling).powi(2) * worst);
    Ok(GapCertificate::symmetric(Method::ZeroDichotomy, eps, Claim::Empty)
        .bound(1.0 / eps)
        .with("epsilon", eps)
        .with("null_dim", d as f64)
        .with("coupling", coupling)
        .with("a_range_inv_norm", 1.0 / sa.range_min)
        .with("c_range_inv_norm", 1.0 / sc.range_min)
        .with("b22_inv_norm", b22_inv_norm))
}

/// `(-r, r)` with `r = √(λmin(A)² + λmin(B)²)` for `[[A, B], [B, -A]]` with
/// symmetric PSD `A` and `B`, one of them definite.
pub fn kirsch_certificate(a: &DenseMatrix, b: &DenseMatrix, tol: Tolerances) -> Result<GapCertificate> {
    if !a.is_square() || a.rows() != b.rows() || !b.is_square() {
        return Err(Error::DimensionMismatch("A and B must be square of the same order"));
    }
    a.check_symmetric(SYM_TOL)?;
    b.check_symmetric(SYM_TOL)?;
    let rank_tol = tol.rank_for(2 * a.rows());
    let effective = |x: &DenseMatrix| -> Result<f64> {
        let e = check_psd(x, tol)?;
        let radius = e.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let min = e.values[0];
        Ok(if min > rank_tol * radius { min } else { 0.0 })
    };
    let (ma, mb) = (effective(a)?, effective(b)?);
    if ma == 0.0 && mb == 0.0 {
        return Err(Error::BothSemidefiniteSingular);
    }
    let r = ma.hypot(mb);
    Ok(GapCertificate::symmetric(Method::Kirsch, r, Claim::Empty)
        .bound(1.0 / r)
        .with("min_eig_a", ma)
        .with("min_eig_b", mb))
}

/// The Kirsch certificate for a block matrix with `C = A` and symmetric `B`.
pub fn kirsch_certificate_for(h: &BlockSaddle) -> Result<GapCertificate> {
    let scale = h.a().max_abs().max(h.c().max_abs()).max(1.0);
    if (h.a() - h.c()).max_abs() > SYM_TOL * scale || h.m() != h.k() {
        return Err(Error::InvalidParameter("kirsch certificate needs C = A"));
    }
    if h.b().check_symmetric(SYM_TOL).is_err() {
        return Err(Error::InvalidParameter("kirsch certificate needs symmetric B"));
    }
    kirsch_certificate(h.a(), &h.b().symmetrized(), h.tolerances())
}

/// `-(‖A‖ + ‖C‖)/2 + √((‖A‖ - ‖C‖)²/4 + ‖B⁻¹‖⁻²)`, a lower bound for the
/// distance from zero to `σ(H)` when positive.
pub fn winklmeier_bound(h: &BlockSaddle) -> Result<f64> {
    let b_inv = inverse_norm_square(h.b(), h.rank_tol())?;
    let na = op_norm(h.a())?;
    let nc = op_norm(h.c())?;
    let s = 1.0 / b_inv;
    Ok(-0.5 * (na + nc) + (0.25 * (na - nc).powi(2) + s * s).sqrt())
}

pub fn winklmeier_certificate(h: &BlockSaddle) -> Result<GapCertificate> {
    let w = winklmeier_bound(h)?;
    let cert = GapCertificate::symmetric(Method::Winklmeier, w, Claim::Empty).with("bound", w);
    Ok(if w > 0.0 { cert.bound(1.0 / w) } else { cert })
}
