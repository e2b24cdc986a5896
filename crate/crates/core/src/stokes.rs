//! Stokes matrices `[[A, B], [Bᵀ, 0]]` and their overdamped quadratic pencil
//! `λ²I - λA - BBᵀ`.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::gap::{null_space_h, BlockSaddle, Claim, GapCertificate, Method};
use crate::linalg::{
    check_psd, dot, inverse, op_norm, rank, singular_values, sym_eig, sym_eigvals, DenseMatrix, Tolerances, SYM_TOL,
};

#[derive(Debug, Clone, PartialEq)]
pub struct StokesMatrix {
    a: DenseMatrix,
    b: DenseMatrix,
    tol: Tolerances,
    norm_a: f64,
    norm_b: f64,
}

impl StokesMatrix {
    pub fn new(a: DenseMatrix, b: DenseMatrix) -> Result<Self> {
        Self::with_tolerances(a, b, Tolerances::default())
    }

    pub fn with_tolerances(a: DenseMatrix, b: DenseMatrix, tol: Tolerances) -> Result<Self> {
        if !a.is_square() || a.rows() == 0 || b.rows() != a.rows() || b.cols() == 0 {
            return Err(Error::DimensionMismatch("B must be m × k for A m × m"));
        }
        b.ensure_finite()?;
        a.check_symmetric(SYM_TOL)?;
        check_psd(&a, tol)?;
        let a = a.symmetrized();
        let norm_a = op_norm(&a)?;
        let norm_b = op_norm(&b)?;
        Ok(StokesMatrix { a, b, tol, norm_a, norm_b })
    }

    pub fn from_saddle(h: &BlockSaddle) -> Result<Self> {
        if h.c().max_abs() != 0.0 {
            return Err(Error::InvalidParameter("a Stokes matrix needs C = 0"));
        }
        Self::with_tolerances(h.a().clone(), h.b().clone(), h.tolerances())
    }

    pub fn a(&self) -> &DenseMatrix {
        &self.a
    }

    pub fn b(&self) -> &DenseMatrix {
        &self.b
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn k(&self) -> usize {
        self.b.cols()
    }

    fn rank_tol(&self) -> f64 {
        self.tol.rank_for(self.m() + self.k())
    }

    pub fn to_saddle(&self) -> Result<BlockSaddle> {
        let k = self.k();
        BlockSaddle::with_tolerances(self.a.clone(), self.b.clone(), DenseMatrix::zeros(k, k), self.tol)
    }

    pub fn assemble(&self) -> DenseMatrix {
        let k = self.k();
        DenseMatrix::from_blocks(&self.a, &self.b, &self.b.transpose(), &DenseMatrix::zeros(k, k))
    }

    /// Whether `N(A) ∩ N(Bᵀ) = {0}`.
    pub fn nab_holds(&self) -> Result<bool> {
        Ok(null_space_h(&self.to_saddle()?)?.na_nb.cols() == 0)
    }

    fn require_nab(&self) -> Result<()> {
        if self.nab_holds()? {
            Ok(())
        } else {
            Err(Error::NabViolated)
        }
    }
}

/// `p±(x) = (xᵀAx ± √Δ(x))/2` with `Δ(x) = (xᵀAx)² + 4‖Bᵀx‖²`, returned as
/// `(p₊, p₋)`.
pub fn rayleigh_p(x: &[f64], s: &StokesMatrix) -> Result<(f64, f64)> {
    if x.len() != s.m() {
        return Err(Error::DimensionMismatch("x must have length m"));
    }
    if (dot(x, x).sqrt() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter("x must be a unit vector"));
    }
    let ax = dot(x, &s.a.mat_vec(x));
    let btx = s.b.transpose().mat_vec(x);
    let bb = dot(&btx, &btx);
    let delta = ax * ax + 4.0 * bb;
    let scale = s.norm_a.max(s.norm_b);
    if !(delta > s.rank_tol() * scale * scale) {
        return Err(Error::DegenerateDirection(delta));
    }
    let root = delta.sqrt();
    let minus = if ax > 0.0 { -2.0 * bb / (ax + root) } else { 0.5 * (ax - root) };
    Ok((0.5 * (ax + root), minus))
}

/// Eigenvalues of a Stokes matrix sorted into the two pencil branches.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilSpectrum {
    /// Negative branch, ascending; padded with the `pencil_zeros` zero
    /// eigenvalues of the pencil to length `m` when `rank B < m`.
    pub lambda_minus: Vec<f64>,
    /// Positive branch, descending.
    pub lambda_plus: Vec<f64>,
    /// Dimension of `ker H`.
    pub zero_multiplicity: usize,
    /// Multiplicity of `λ = 0` as a pencil eigenvalue, `m - rank B`.
    pub pencil_zeros: usize,
}

impl PencilSpectrum {
    pub fn negative_count(&self) -> usize {
        self.lambda_minus.len() - self.pencil_zeros
    }
}

pub fn pencil_spectrum(s: &StokesMatrix) -> Result<PencilSpectrum> {
    let h = s.assemble();
    let ev = sym_eigvals(&h)?;
    let radius = ev.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let cut = s.rank_tol() * radius;
    let mut lambda_minus: Vec<f64> = ev.iter().copied().filter(|&x| x < -cut).collect();
    let mut lambda_plus: Vec<f64> = ev.iter().copied().filter(|&x| x > cut).collect();
    lambda_plus.reverse();
    let zero_multiplicity = ev.len() - lambda_minus.len() - lambda_plus.len();
    let rank_b = rank(&s.b, s.rank_tol())?;
    let pencil_zeros = s.m().saturating_sub(rank_b);
    lambda_minus.extend(core::iter::repeat_n(0.0, pencil_zeros));
    Ok(PencilSpectrum { lambda_minus, lambda_plus, zero_multiplicity, pencil_zeros })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalSource {
    Minimal,
    Ruwa,
    Axel,
    NewEstimate,
}

impl IntervalSource {
    pub fn as_str(self) -> &'static str {
        match self {
            IntervalSource::Minimal => "minimal",
            IntervalSource::Ruwa => "ruwa",
            IntervalSource::Axel => "axel",
            IntervalSource::NewEstimate => "new_estimate",
        }
    }
}

/// Closed intervals enclosing the negative and the positive branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalPair {
    pub i_minus: (f64, f64),
    pub i_plus: (f64, f64),
    pub source: IntervalSource,
}

impl IntervalPair {
    /// Whether both intervals of `other` lie in the corresponding intervals
    /// of `self`, up to `tol`.
    pub fn contains(&self, other: &IntervalPair, tol: f64) -> bool {
        let inside = |outer: (f64, f64), inner: (f64, f64)| outer.0 - tol <= inner.0 && inner.1 <= outer.1 + tol;
        inside(self.i_minus, other.i_minus) && inside(self.i_plus, other.i_plus)
    }

    pub fn contains_value(&self, x: f64, tol: f64) -> bool {
        let inside = |(lo, hi): (f64, f64)| lo - tol <= x && x <= hi + tol;
        inside(self.i_minus) || inside(self.i_plus)
    }
}

/// `I₋ = [min λ⁻, max λ⁻]` and `I₊ = [min λ⁺, max λ⁺]`; all four endpoints
/// are eigenvalues of the pencil.
pub fn minimal_intervals(s: &StokesMatrix) -> Result<IntervalPair> {
    s.require_nab()?;
    let p = pencil_spectrum(s)?;
    let (lm, lp) = (&p.lambda_minus, &p.lambda_plus);
    if lm.is_empty() || lp.is_empty() {
        return Err(Error::NabViolated);
    }
    Ok(IntervalPair {
        i_minus: (lm[0], lm[lm.len() - 1]),
        i_plus: (lp[lp.len() - 1], lp[0]),
        source: IntervalSource::Minimal,
    })
}

struct DefiniteData {
    alpha_min: f64,
    alpha_max: f64,
    a_inv: DenseMatrix,
}

fn definite_data(s: &StokesMatrix) -> Result<DefiniteData> {
    let e = sym_eig(&s.a)?;
    let alpha_min = e.values[0];
    let alpha_max = e.values[e.values.len() - 1];
    if !(alpha_min > s.rank_tol() * alpha_max) {
        return Err(Error::NotDefinite { block: "A", min_eig: alpha_min });
    }
    if rank(&s.b, s.rank_tol())? < s.k() {
        return Err(Error::RankDeficient);
    }
    Ok(DefiniteData { alpha_min, alpha_max, a_inv: inverse(&s.a)? })
}

/// Enclosures from the extreme eigenvalues of `A` and singular values of `B`,
/// for positive definite `A` and `B` of full column rank.
pub fn ruwa_intervals(s: &StokesMatrix) -> Result<IntervalPair> {
    let d = definite_data(s)?;
    let sv = singular_values(&s.b)?;
    let (b_max, b_min) = (sv[0], sv[sv.len() - 1]);
    let (a1, am) = (d.alpha_min, d.alpha_max);
    Ok(IntervalPair {
        i_minus: (
            0.5 * (a1 - (a1 * a1 + 4.0 * b_max * b_max).sqrt()),
            0.5 * (am - (am * am + 4.0 * b_min * b_min).sqrt()),
        ),
        i_plus: (a1, 0.5 * (am + (am * am + 4.0 * b_max * b_max).sqrt())),
        source: IntervalSource::Ruwa,
    })
}

/// Enclosures from the extreme eigenvalues of `A` and of `BᵀA⁻¹B`, for
/// positive definite `A` and `B` of full column rank.
pub fn axel_intervals(s: &StokesMatrix) -> Result<IntervalPair> {
    let d = definite_data(s)?;
    let schur = s.b.t_matmul(&d.a_inv.matmul(&s.b)).symmetrized();
    let sig = sym_eigvals(&schur)?;
    let (s1, sm) = (sig[0], sig[sig.len() - 1]);
    let (a1, am) = (d.alpha_min, d.alpha_max);
    let reach = 0.5 * (am * am + 4.0 * sm * am).sqrt();
    Ok(IntervalPair {
        i_minus: (0.5 * am - reach, -s1 * a1 / (s1 + a1)),
        i_plus: (a1, 0.5 * am + reach),
        source: IntervalSource::Axel,
    })
}

/// `(-2β₁/(α + √(α² + 4)), β₁)` contains no nonzero eigenvalue, where `β₁` is
/// the smallest singular value of `B` and `α = ‖(BBᵀ)^{-1/4}A(BBᵀ)^{-1/4}‖`.
pub fn new_gap_estimate(s: &StokesMatrix) -> Result<GapCertificate> {
    if s.k() < s.m() {
        return Err(Error::RankDeficient);
    }
    let alpha = crate::gap::relative_norm(&s.a, &s.b, s.rank_tol()).map_err(|e| match e {
        Error::UnboundedRelativeBound => Error::RankDeficient,
        other => other,
    })?;
    let sv = singular_values(&s.b)?;
    let beta1 = sv[sv.len() - 1];
    let root = (alpha * alpha + 4.0).sqrt();
    let cert = GapCertificate::new(Method::StokesNew, -2.0 * beta1 / (alpha + root), beta1, Claim::KernelOnly)
        .with("alpha", alpha)
        .with("beta1", beta1);
    Ok(if s.m() == s.k() { cert.bound((alpha + root) / (2.0 * beta1)) } else { cert })
}

/// Relative perturbation size `η ∈ [0, 1)` for `|xᵀÃx| ≤ η·xᵀAx` and
/// `‖B̃ᵀx‖ ≤ η·‖Bᵀx‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationSpec {
    pub eta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Minus,
    Plus,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Minus => "minus",
            Branch::Plus => "plus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    pub branch: Branch,
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
}

/// Enclosures for the eigenvalues after a relative perturbation of both `A`
/// and `B`, in the order negative branch ascending, positive branch
/// descending.
///
/// The positive branch scales by `1 ± η`. On the negative branch the
/// factors are `(1+η)²/(1-η)` and `(1-η)²/(1+η)`: `p₋` is homogeneous of
/// degree one in `(xᵀAx, ‖Bᵀx‖)`, decreasing in `‖Bᵀx‖` and increasing in
/// `xᵀAx`, and both extremes are approached when `xᵀAx ≫ ‖Bᵀx‖`.
pub fn perturbation_bounds(base: &PencilSpectrum, spec: PerturbationSpec) -> Result<Vec<Enclosure>> {
    let eta = spec.eta;
    if !(0.0..1.0).contains(&eta) {
        return Err(Error::EtaOutOfRange(eta));
    }
    let (up, down) = ((1.0 + eta).powi(2) / (1.0 - eta), (1.0 - eta).powi(2) / (1.0 + eta));
    let minus =
        base.lambda_minus.iter().map(|&v| Enclosure { branch: Branch::Minus, value: v, lo: up * v, hi: down * v });
    let plus = base.lambda_plus.iter().map(|&v| Enclosure {
        branch: Branch::Plus,
        value: v,
        lo: (1.0 - eta) * v,
        hi: (1.0 + eta) * v,
    });
    Ok(minus.chain(plus).collect())
}
