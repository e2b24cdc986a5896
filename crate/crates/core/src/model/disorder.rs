use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{build_blocks, build_hc, build_modified, Disorder, ModelSpec};
use crate::error::{Error, Result};
use crate::linalg::{bidiag_svd_hra, sym_eigvals, Bidiagonal, Orientation};

/// `m` samples of `U[lo, hi]` from ChaCha8 seeded with `seed`, using the top
/// 53 bits of each output word.
pub fn draw_disorder(m: usize, d: Disorder) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(d.seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    (0..m)
        .map(|_| {
            let u = (rng.next_u64() >> 11) as f64 * scale;
            d.lo + (d.hi - d.lo) * u
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DisorderReport {
    pub m: usize,
    pub omega: Vec<f64>,
    /// Spectrum of `H_ω`, ascending.
    pub eigenvalues: Vec<f64>,
    /// Spectrum of the boundary-modified `H̃_ω`, ascending.
    pub eigenvalues_modified: Vec<f64>,
    /// The eigenvalues of `H_ω` closest to zero, ascending by modulus.
    pub near_zero: Vec<f64>,
    pub near_zero_modified: Vec<f64>,
    /// Modulus of the central pair of `H_ω`, `2σmin(T_ω)` to high relative
    /// accuracy.
    pub central_modulus: f64,
    /// Smallest modulus of `H_ω` once the central pair is removed.
    pub edge: f64,
    /// Smallest modulus of `H̃_ω`.
    pub min_abs_modified: f64,
    /// `max |λᵢ + λₙ₊₁₋ᵢ|` over the sorted spectrum of `H_ω`.
    pub symmetry_error: f64,
    pub symmetry_error_modified: f64,
}

fn by_modulus(ev: &[f64], count: usize) -> Vec<f64> {
    let mut v = ev.to_vec();
    v.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(a.total_cmp(b)));
    v.truncate(count);
    v
}

fn symmetry_error(ev: &[f64]) -> f64 {
    let n = ev.len();
    (0..n).map(|i| (ev[i] + ev[n - 1 - i]).abs()).fold(0.0, f64::max)
}

/// Spectra of `H_ω = [[A_ω, B], [-B, -A_ω]]` and its boundary modification
/// for one seeded draw.
pub fn disorder_experiment(spec: &ModelSpec, count_near_zero: usize) -> Result<DisorderReport> {
    spec.validate()?;
    if spec.disorder.is_none() {
        return Err(Error::InvalidParameter("disorder experiment needs a disorder law"));
    }
    let (a, _) = build_blocks(spec)?;
    let omega = a.diagonal();
    let eigenvalues = sym_eigvals(&build_hc(spec)?)?;
    let (_, h_mod) = build_modified(spec)?;
    let eigenvalues_modified = sym_eigvals(&h_mod)?;
    let t = Bidiagonal::new(omega.iter().map(|w| 0.5 * w).collect(), alloc::vec![1.0; spec.m - 1], Orientation::Lower)?;
    let sv = bidiag_svd_hra(&t)?;
    let central_modulus = 2.0 * sv[sv.len() - 1];
    let edge = if sv.len() > 1 { 2.0 * sv[sv.len() - 2] } else { f64::INFINITY };
    let min_abs_modified = eigenvalues_modified.iter().fold(f64::INFINITY, |m, x| m.min(x.abs()));
    Ok(DisorderReport {
        m: spec.m,
        near_zero: by_modulus(&eigenvalues, count_near_zero),
        near_zero_modified: by_modulus(&eigenvalues_modified, count_near_zero),
        symmetry_error: symmetry_error(&eigenvalues),
        symmetry_error_modified: symmetry_error(&eigenvalues_modified),
        omega,
        eigenvalues,
        eigenvalues_modified,
        central_modulus,
        edge,
        min_abs_modified,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    H,
    HTilde,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::H => "H",
            Variant::HTilde => "Htilde",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub mean: f64,
    pub variant: Variant,
    pub index: usize,
    pub eigenvalue: f64,
}

/// Sorted spectra of `H_ω` and `H̃_ω` for `ω ~ U[M - δ, M + δ]`, one draw
/// per mean `M`; the `i`-th mean uses seed `seed + i`.
pub fn gap_scan(means: &[f64], delta: f64, m: usize, seed: u64) -> Result<Vec<ScanRow>> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::InvalidParameter("delta must be positive"));
    }
    let mut rows = Vec::with_capacity(means.len() * 4 * m);
    for (i, &mean) in means.iter().enumerate() {
        let spec = ModelSpec::with_disorder(m, mean - delta, mean + delta, seed.wrapping_add(i as u64))?;
        let h = sym_eigvals(&build_hc(&spec)?)?;
        let (_, h_mod) = build_modified(&spec)?;
        let ht = sym_eigvals(&h_mod)?;
        for (variant, ev) in [(Variant::H, h), (Variant::HTilde, ht)] {
            rows.extend(ev.into_iter().enumerate().map(|(index, eigenvalue)| ScanRow {
                mean,
                variant,
                index,
                eigenvalue,
            }));
        }
    }
    Ok(rows)
}
