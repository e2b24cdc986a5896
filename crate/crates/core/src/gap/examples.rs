use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{check_psd, inverse, op_norm, sym_eigvals, DenseMatrix, Lu, Tolerances};

/// One-parameter families whose gap at zero is not monotone in the parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `[[A, B_t], [B_t, -A]]` with `A = [[2, -1], [-1, 2]]`, `B_t = diag(1, t)`.
    KirschBt,
    /// `[[tA, B], [Bᵀ, -tA]]` for a fixed 2×2 pair.
    ScaledA,
    /// `[[A_t, B], [Bᵀ, -A_t]]` with `A_t = diag(0, t)`, `B = [[0, 1], [-1, 0]]`;
    /// its determinant is one for every `t`.
    Simple,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::KirschBt => "kirsch_Bt",
            Family::ScaledA => "scaled_A",
            Family::Simple => "simple",
        }
    }

    pub fn matrix(self, t: f64) -> DenseMatrix {
        let (a, b) = match self {
            Family::KirschBt => {
                (DenseMatrix::from_rows(&[[2.0, -1.0], [-1.0, 2.0]]), DenseMatrix::from_diag(&[1.0, t]))
            }
            Family::ScaledA => (
                DenseMatrix::from_rows(&[[1.24, 0.81], [0.81, 0.53]]).scale(t),
                DenseMatrix::from_rows(&[[0.30, -0.27], [-0.31, -0.48]]),
            ),
            Family::Simple => (DenseMatrix::from_diag(&[0.0, t]), DenseMatrix::from_rows(&[[0.0, 1.0], [-1.0, 0.0]])),
        };
        DenseMatrix::from_blocks(&a, &b, &b.transpose(), &a.scale(-1.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub t: f64,
    pub min_abs_eig: f64,
    /// Smallest positive eigenvalue.
    pub min_pos_eig: f64,
    pub det: f64,
}

/// Smallest eigenvalue modulus of the family member at each grid point.
pub fn nonmono_curve(t_grid: &[f64], family: Family) -> Result<Vec<CurvePoint>> {
    if t_grid.iter().any(|t| !(*t > 0.0) || !t.is_finite()) {
        return Err(Error::InvalidParameter("grid values must be positive"));
    }
    if t_grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidParameter("grid must be strictly ascending"));
    }
    t_grid
        .iter()
        .map(|&t| {
            let h = family.matrix(t);
            let ev = sym_eigvals(&h)?;
            let min_abs_eig = ev.iter().fold(f64::INFINITY, |m, x| m.min(x.abs()));
            let min_pos_eig = ev.iter().copied().filter(|&x| x > 0.0).fold(f64::INFINITY, f64::min);
            let det = Lu::new(&h).map(|lu| lu.determinant()).unwrap_or(0.0);
            Ok(CurvePoint { t, min_abs_eig, min_pos_eig, det })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct OmladicRow {
    pub t: f64,
    pub inv_norm: f64,
    pub closed_form: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BottcherReport {
    pub m: DenseMatrix,
    pub a: DenseMatrix,
    pub c: DenseMatrix,
    /// `‖AC - M‖ / (‖A‖‖C‖)`, the relative residual of the PSD split.
    pub split_residual: f64,
    pub norm_i_plus_m: f64,
    pub norm_inv: f64,
    /// Whether `‖(I + M)⁻¹‖ ≤ ‖I + M‖` fails.
    pub conjecture_violated: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutingRow {
    pub a_diag: Vec<f64>,
    pub c_diag: Vec<f64>,
    pub inv_norm: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleReport {
    pub omladic: Vec<OmladicRow>,
    pub bottcher: BottcherReport,
    pub commuting: Vec<CommutingRow>,
}

fn inv_iplus(ac: &DenseMatrix) -> Result<f64> {
    op_norm(&inverse(&(&DenseMatrix::identity(ac.rows()) + ac))?)
}

fn omladic(t: f64) -> Result<OmladicRow> {
    let a = DenseMatrix::from_diag(&[t, 1.0 / t]);
    let c = DenseMatrix::from_rows(&[[1.0 / t, 1.0], [1.0, t]]);
    let inv_norm = inv_iplus(&a.matmul(&c))?;
    let closed = DenseMatrix::from_rows(&[[2.0, -t], [-1.0 / t, 2.0]]).scale(1.0 / 3.0);
    Ok(OmladicRow { t, inv_norm, closed_form: op_norm(&closed)? })
}

/// PSD `A`, `C` with `AC = M` for a lower triangular `M` with distinct
/// positive diagonal, from `M = UΛU⁻¹`: `A = UΛ^{1/2}Uᵀ`, `C = U⁻ᵀΛ^{1/2}U⁻¹`.
pub fn bottcher_pair(m: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::DimensionMismatch("M must be square"));
    }
    let lambda = m.diagonal();
    if lambda.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::InvalidParameter("diagonal of M must be positive"));
    }
    let mut u = DenseMatrix::zeros(n, n);
    for j in 0..n {
        u[(j, j)] = 1.0;
        for i in j + 1..n {
            let s: f64 = (j..i).map(|k| m[(i, k)] * u[(k, j)]).sum();
            let gap = lambda[j] - lambda[i];
            if gap == 0.0 {
                return Err(Error::InvalidParameter("diagonal of M must be distinct"));
            }
            u[(i, j)] = s / gap;
        }
    }
    let u_inv = inverse(&u)?;
    let root: Vec<f64> = lambda.iter().map(|x| x.sqrt()).collect();
    let d = DenseMatrix::from_diag(&root);
    let a = u.matmul(&d).matmul_t(&u).symmetrized();
    let c = u_inv.t_matmul(&d).matmul(&u_inv).symmetrized();
    Ok((a, c))
}

fn bottcher() -> Result<BottcherReport> {
    let m = DenseMatrix::from_rows(&[[1.0, 0.0, 0.0], [-20.0, 1.1, 0.0], [0.0, -20.0, 1.2]]);
    let (a, c) = bottcher_pair(&m)?;
    check_psd(&a, Tolerances::default())?;
    check_psd(&c, Tolerances::default())?;
    let split_residual = op_norm(&(&a.matmul(&c) - &m))? / (op_norm(&a)? * op_norm(&c)?);
    let norm_i_plus_m = op_norm(&(&DenseMatrix::identity(3) + &m))?;
    let norm_inv = inv_iplus(&m)?;
    Ok(BottcherReport {
        m,
        a,
        c,
        split_residual,
        norm_i_plus_m,
        norm_inv,
        conjecture_violated: norm_inv > norm_i_plus_m,
    })
}

fn commuting(a_diag: &[f64], c_diag: &[f64]) -> Result<CommutingRow> {
    let ac = DenseMatrix::from_diag(a_diag).matmul(&DenseMatrix::from_diag(c_diag));
    Ok(CommutingRow { a_diag: a_diag.to_vec(), c_diag: c_diag.to_vec(), inv_norm: inv_iplus(&ac)? })
}

/// Unbounded growth of `‖(I + AC)⁻¹‖`, the 3×3 pair refuting
/// `‖(I + AC)⁻¹‖ ≤ ‖I + AC‖`, and commuting pairs for contrast.
pub fn counterexample_suite() -> Result<CounterexampleReport> {
    Ok(CounterexampleReport {
        omladic: [1.0, 3.0, 10.0, 100.0].into_iter().map(omladic).collect::<Result<_>>()?,
        bottcher: bottcher()?,
        commuting: alloc::vec![commuting(&[1.0, 2.0], &[1.0, 2.0])?, commuting(&[0.0, 5.0, 0.5], &[3.0, 0.2, 0.0])?],
    })
}
