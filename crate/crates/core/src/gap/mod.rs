//! Gap certificates and inverse-norm bounds for `H = [[A, B], [Bᵀ, -C]]`.

mod certificates;
mod examples;
mod product;
mod quartic;
mod text;

use alloc::vec::Vec;
use core::fmt;

pub use certificates::{
    diag_gap, hbinv_certificate, hbinv_scaled_bound, kirsch_certificate, kirsch_certificate_for, null_space_h,
    relative_bounds, stretch_certificate, winklmeier_bound, winklmeier_certificate, zero_dichotomy_certificate,
    NullSpaceReport, RelativeBounds,
};
pub use examples::{
    bottcher_pair, counterexample_suite, nonmono_curve, BottcherReport, CommutingRow, CounterexampleReport, CurvePoint,
    Family, OmladicRow,
};
pub use product::{func_calc_ac, inv_iplusac_bound, verify_norm_floor};
pub use quartic::{eig_4x4, BSymmetry, Quartic4x4Params};
pub use text::{format_saddle, parse_saddle, SaddleBlocks};

pub(crate) use certificates::relative_norm;

use crate::error::{Error, Result};
use crate::linalg::{check_psd, sym_eigvals, DenseMatrix, Tolerances, SYM_TOL};

/// The block matrix `[[A, B], [Bᵀ, -C]]` with symmetric PSD `A` (m×m) and
/// `C` (k×k).
#[derive(Debug, Clone, PartialEq)]
pub struct BlockSaddle {
    a: DenseMatrix,
    b: DenseMatrix,
    c: DenseMatrix,
    tol: Tolerances,
}

impl BlockSaddle {
    pub fn new(a: DenseMatrix, b: DenseMatrix, c: DenseMatrix) -> Result<Self> {
        Self::with_tolerances(a, b, c, Tolerances::default())
    }

    pub fn with_tolerances(a: DenseMatrix, b: DenseMatrix, c: DenseMatrix, tol: Tolerances) -> Result<Self> {
        if a.rows() == 0 || c.rows() == 0 {
            return Err(Error::DimensionMismatch("blocks must be nonempty"));
        }
        if b.rows() != a.rows() || b.cols() != c.rows() {
            return Err(Error::DimensionMismatch("B must be m × k for A m × m and C k × k"));
        }
        b.ensure_finite()?;
        a.check_symmetric(SYM_TOL)?;
        c.check_symmetric(SYM_TOL)?;
        check_psd(&a, tol)?;
        check_psd(&c, tol)?;
        if !(tol.psd > 0.0) || tol.rank.is_some_and(|r| !(r > 0.0)) {
            return Err(Error::InvalidParameter("tolerances must be positive"));
        }
        Ok(BlockSaddle { a: a.symmetrized(), b, c: c.symmetrized(), tol })
    }

    /// Stokes matrix: `C = 0` of order `B.cols()`.
    pub fn stokes(a: DenseMatrix, b: DenseMatrix) -> Result<Self> {
        let k = b.cols();
        Self::new(a, b, DenseMatrix::zeros(k, k))
    }

    pub fn a(&self) -> &DenseMatrix {
        &self.a
    }

    pub fn b(&self) -> &DenseMatrix {
        &self.b
    }

    pub fn c(&self) -> &DenseMatrix {
        &self.c
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn k(&self) -> usize {
        self.c.rows()
    }

    pub fn order(&self) -> usize {
        self.m() + self.k()
    }

    pub(crate) fn rank_tol(&self) -> f64 {
        self.tol.rank_for(self.order())
    }

    pub fn assemble(&self) -> DenseMatrix {
        DenseMatrix::from_blocks(&self.a, &self.b, &self.b.transpose(), &self.c.scale(-1.0))
    }

    /// Eigenvalues of the assembled matrix, ascending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        sym_eigvals(&self.assemble())
    }

    /// The same blocks with `B` replaced by `t·B`.
    pub fn scale_b(&self, t: f64) -> Self {
        BlockSaddle { b: self.b.scale(t), ..self.clone() }
    }
}

/// Which bound produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DiagGap,
    Stretch,
    HbInv,
    ZeroDichotomy,
    Kirsch,
    Winklmeier,
    StokesNew,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DiagGap => "diag_gap",
            Method::Stretch => "stretch",
            Method::HbInv => "hbinv",
            Method::ZeroDichotomy => "zero_dichotomy",
            Method::Kirsch => "kirsch",
            Method::Winklmeier => "winklmeier",
            Method::StokesNew => "stokes_new",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a certificate asserts about its interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// No eigenvalue lies in the open interval.
    Empty,
    /// Only the eigenvalue zero may lie in the open interval.
    KernelOnly,
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Empty => "empty",
            Claim::KernelOnly => "kernel_only",
        }
    }
}

/// An open interval around zero together with the bound that certifies it.
#[derive(Debug, Clone, PartialEq)]
pub struct GapCertificate {
    pub method: Method,
    pub lo: f64,
    pub hi: f64,
    pub claim: Claim,
    pub inv_norm_bound: Option<f64>,
    pub quantities: Vec<(&'static str, f64)>,
}

impl GapCertificate {
    pub(crate) fn new(method: Method, lo: f64, hi: f64, claim: Claim) -> Self {
        GapCertificate { method, lo, hi, claim, inv_norm_bound: None, quantities: Vec::new() }
    }

    pub(crate) fn with(mut self, name: &'static str, value: f64) -> Self {
        self.quantities.push((name, value));
        self
    }

    pub(crate) fn bound(mut self, b: f64) -> Self {
        self.inv_norm_bound = Some(b);
        self
    }

    /// Symmetric certificate `(-r, r)`; `r ≤ 0` gives the empty interval.
    pub(crate) fn symmetric(method: Method, r: f64, claim: Claim) -> Self {
        if r > 0.0 {
            Self::new(method, -r, r, claim)
        } else {
            Self::new(method, 0.0, 0.0, claim)
        }
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn is_empty(&self) -> bool {
        !(self.lo < self.hi)
    }

    pub fn quantity(&self, name: &str) -> Option<f64> {
        self.quantities.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    /// Eigenvalues that contradict the certificate: strictly inside the
    /// interval shrunk by `margin`, not counting eigenvalues within `margin`
    /// of zero when the claim allows a kernel.
    pub fn violations(&self, eigenvalues: &[f64], margin: f64) -> Vec<f64> {
        eigenvalues
            .iter()
            .copied()
            .filter(|&x| x > self.lo + margin && x < self.hi - margin)
            .filter(|&x| !(self.claim == Claim::KernelOnly && x.abs() <= margin))
            .collect()
    }

    pub fn is_sound(&self, eigenvalues: &[f64], margin: f64) -> bool {
        self.violations(eigenvalues, margin).is_empty()
    }
}
