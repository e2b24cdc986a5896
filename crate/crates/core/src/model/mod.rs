//! A one-dimensional tight-binding model with two sublattices.
//!
//! `H_c = [[A + 2cI, B], [-B, -A - 2cI]]` of order `n = 2m`, where `A` has
//! ones on both off-diagonals and `B` has `+1` above and `-1` below the
//! diagonal. With `U = [[I, I], [I, -I]]/√2` the matrix is unitarily
//! equivalent to `K_c = 2[[0, T_c], [T_cᵀ, 0]]` for the lower bidiagonal
//! `T_c` with `c` on the diagonal and ones below it, so its spectrum is
//! `±2σ(T_c)`.

mod disorder;
mod modified;
mod secular;

pub use disorder::{disorder_experiment, draw_disorder, gap_scan, DisorderReport, ScanRow, Variant};
pub use modified::{build_modified, modified_spectrum_closed_form};
pub use secular::{
    secular_solve, spurious_estimate, stable_gap, verify_stable_gap, HypRoot, SecularRoots, SpuriousEstimate,
    StableGap, StableGapCheck,
};

use alloc::vec;

use crate::error::{Error, Result};
use crate::linalg::{Bidiagonal, DenseMatrix, Orientation};

/// Diagonal disorder `ωᵢ ~ U[lo, hi]`, drawn from a seeded generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disorder {
    pub lo: f64,
    pub hi: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSpec {
    pub m: usize,
    pub c: f64,
    pub disorder: Option<Disorder>,
}

impl ModelSpec {
    pub fn new(m: usize, c: f64) -> Result<Self> {
        let spec = ModelSpec { m, c, disorder: None };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_disorder(m: usize, lo: f64, hi: f64, seed: u64) -> Result<Self> {
        let spec = ModelSpec { m, c: 0.0, disorder: Some(Disorder { lo, hi, seed }) };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::InvalidParameter("m must be at least 2"));
        }
        if !(self.c >= 0.0) || !self.c.is_finite() {
            return Err(Error::InvalidParameter("c must be finite and nonnegative"));
        }
        if let Some(d) = self.disorder {
            if !(d.lo <= d.hi) || !d.lo.is_finite() || !d.hi.is_finite() {
                return Err(Error::InvalidParameter("disorder law needs finite lo ≤ hi"));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        2 * self.m
    }

    fn require_deterministic(&self) -> Result<()> {
        self.validate()?;
        if self.disorder.is_some() {
            return Err(Error::InvalidParameter("operation needs a model without disorder"));
        }
        Ok(())
    }
}

/// `(A, B)`; with disorder `A` carries `diag(ω)` on its diagonal.
pub fn build_blocks(spec: &ModelSpec) -> Result<(DenseMatrix, DenseMatrix)> {
    spec.validate()?;
    let m = spec.m;
    let mut a = DenseMatrix::from_fn(m, m, |i, j| if i.abs_diff(j) == 1 { 1.0 } else { 0.0 });
    let b = DenseMatrix::from_fn(m, m, |i, j| {
        if j == i + 1 {
            1.0
        } else if i == j + 1 {
            -1.0
        } else {
            0.0
        }
    });
    if let Some(d) = spec.disorder {
        for (i, w) in draw_disorder(m, d).into_iter().enumerate() {
            a[(i, i)] = w;
        }
    }
    Ok((a, b))
}

/// `[[A + 2cI, B], [-B, -A - 2cI]]`, or `[[A_ω, B], [-B, -A_ω]]` with disorder.
pub fn build_hc(spec: &ModelSpec) -> Result<DenseMatrix> {
    let (a, b) = build_blocks(spec)?;
    let a = if spec.disorder.is_some() { a } else { a.shift_diag(2.0 * spec.c) };
    Ok(DenseMatrix::from_blocks(&a, &b, &b.scale(-1.0), &a.scale(-1.0)))
}

/// The symmetric orthogonal involution `[[I, I], [I, -I]]/√2`.
pub fn build_u(m: usize) -> DenseMatrix {
    let s = core::f64::consts::FRAC_1_SQRT_2;
    DenseMatrix::from_fn(2 * m, 2 * m, |i, j| {
        if i % m != j % m {
            0.0
        } else if i >= m && j >= m {
            -s
        } else {
            s
        }
    })
}

pub fn build_tc(spec: &ModelSpec) -> Result<Bidiagonal> {
    spec.require_deterministic()?;
    Bidiagonal::new(vec![spec.c; spec.m], vec![1.0; spec.m - 1], Orientation::Lower)
}

/// `2[[0, T_c], [T_cᵀ, 0]]`.
pub fn build_kc(spec: &ModelSpec) -> Result<DenseMatrix> {
    let t = build_tc(spec)?.to_dense().scale(2.0);
    let z = DenseMatrix::zeros(spec.m, spec.m);
    Ok(DenseMatrix::from_blocks(&z, &t, &t.transpose(), &z))
}

/// `W_c = T₋cᵀT₋c`: tridiagonal with `c² + 1` on the diagonal except `c²` in
/// the last entry and `-c` off the diagonal.
pub fn build_wc(spec: &ModelSpec) -> Result<DenseMatrix> {
    spec.require_deterministic()?;
    let (m, c) = (spec.m, spec.c);
    Ok(DenseMatrix::from_fn(m, m, |i, j| {
        if i == j {
            if i + 1 == m {
                c * c
            } else {
                c * c + 1.0
            }
        } else if i.abs_diff(j) == 1 {
            -c
        } else {
            0.0
        }
    }))
}

/// Infinite-volume spectra: the range of the `W` symbol `c² + 1 - 2c·cos θ`
/// and the two bands of `H_c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolSpectrum {
    pub w_band: (f64, f64),
    pub h_bands: ((f64, f64), (f64, f64)),
}

pub fn symbol_spectrum(c: f64) -> Result<SymbolSpectrum> {
    if !(c >= 0.0) || !c.is_finite() {
        return Err(Error::InvalidParameter("c must be finite and nonnegative"));
    }
    let (lo, hi) = ((1.0 - c).abs(), 1.0 + c);
    Ok(SymbolSpectrum { w_band: (lo * lo, hi * hi), h_bands: ((-2.0 * hi, -2.0 * lo), (2.0 * lo, 2.0 * hi)) })
}
