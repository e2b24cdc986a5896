use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::{build_hc, build_tc, ModelSpec};
use crate::error::{Error, Result};
use crate::linalg::{bidiag_svd_hra, sym_eigvals};

const BISECTIONS: usize = 80;

/// The root below the band of `W_c` for `0 < c < 1`, `λ₁ = c² + 1 - 2c·cosh α₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypRoot {
    pub alpha1: f64,
    /// `α₁ - α₀` with `α₀ = -ln c`, kept separately because it underflows
    /// relative to `α₀`.
    pub delta: f64,
    pub log_lambda1: f64,
}

/// Roots of the secular equation of `W_c`, whose eigenvalues are
/// `c² + 1 - 2c·cos α` at the trigonometric roots and the hyperbolic
/// counterpart at `α₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct SecularRoots {
    pub m: usize,
    pub c: f64,
    /// Ascending roots in `(0, π)`.
    pub trig_roots: Vec<f64>,
    pub hyp_root: Option<HypRoot>,
    /// `arccos(1/c)` for `c > 1`, where `1 - c·cos α` changes sign.
    pub alpha_hat: Option<f64>,
}

impl SecularRoots {
    pub fn trig_lambda(&self, alpha: f64) -> f64 {
        let s = (0.5 * alpha).sin();
        (1.0 - self.c).powi(2) + 4.0 * self.c * s * s
    }

    /// Natural logarithms of the eigenvalues of `W_c`, ascending.
    pub fn log_eigenvalues(&self) -> Vec<f64> {
        let hyp = self.hyp_root.map(|h| h.log_lambda1);
        hyp.into_iter().chain(self.trig_roots.iter().map(|&a| self.trig_lambda(a).ln())).collect()
    }

    /// Eigenvalues of `W_c`, ascending; the hyperbolic one may underflow to zero.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let hyp = self.hyp_root.map(|h| h.log_lambda1.exp());
        hyp.into_iter().chain(self.trig_roots.iter().map(|&a| self.trig_lambda(a))).collect()
    }

    /// `|F(α)|` for the trigonometric secular function
    /// `F(α) = (1 - c·cos α)·sin mα - c·cos mα·sin α`.
    pub fn residual(&self, alpha: f64) -> f64 {
        secular_f(self.m, self.c, alpha).abs()
    }
}

fn secular_f(m: usize, c: f64, alpha: f64) -> f64 {
    let mf = m as f64;
    (1.0 - c * alpha.cos()) * (mf * alpha).sin() - c * (mf * alpha).cos() * alpha.sin()
}

fn secular_df(m: usize, c: f64, alpha: f64) -> f64 {
    let mf = m as f64;
    let (s, co) = alpha.sin_cos();
    let (sm, cm) = (mf * alpha).sin_cos();
    c * s * sm + (1.0 - c * co) * mf * cm + c * mf * sm * s - c * cm * co
}

/// `F(α)/sin α`, continuous on `[0, π]` with the limits filled in at the ends.
fn secular_g(m: usize, c: f64, alpha: f64) -> f64 {
    let mf = m as f64;
    if alpha <= 0.0 {
        return mf * (1.0 - c) - c;
    }
    if alpha >= PI {
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        return sign * (mf * (1.0 + c) + c);
    }
    let ratio = (mf * alpha).sin() / alpha.sin();
    (1.0 - c * alpha.cos()) * ratio - c * (mf * alpha).cos()
}

fn bisect(m: usize, c: f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut g_lo = secular_g(m, c, lo);
    for _ in 0..BISECTIONS {
        let mid = 0.5 * (lo + hi);
        let g = secular_g(m, c, mid);
        if g == 0.0 {
            return mid;
        }
        if (g > 0.0) == (g_lo > 0.0) {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..3 {
        let d = secular_df(m, c, x);
        if d == 0.0 {
            break;
        }
        let next = x - secular_f(m, c, x) / d;
        if !(next > lo && next < hi) || secular_f(m, c, next).abs() >= secular_f(m, c, x).abs() {
            break;
        }
        x = next;
    }
    x
}

fn hyperbolic_root(m: usize, c: f64) -> HypRoot {
    let mf = m as f64;
    let alpha0 = -c.ln();
    let phi = |delta: f64| {
        let alpha = alpha0 + delta;
        let eps = (-2.0 * mf * alpha).exp();
        delta.exp_m1() + 2.0 * eps * (1.0 - c * alpha.cosh()) / (1.0 + eps)
    };
    let (mut lo, mut hi) = (-alpha0, 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if phi(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut delta = 0.5 * (lo + hi);
    let mut best = phi(delta).abs();
    for _ in 0..60 {
        let alpha = alpha0 + delta;
        let eps = (-2.0 * mf * alpha).exp();
        let next = (-2.0 * eps * (1.0 - c * alpha.cosh()) / (1.0 + eps)).ln_1p();
        let r = phi(next).abs();
        if !(r < best) {
            break;
        }
        delta = next;
        best = r;
    }
    let log_lambda1 = (4.0 * c).ln() + (alpha0 + 0.5 * delta).sinh().ln() + (-(0.5 * delta).sinh()).ln();
    HypRoot { alpha1: alpha0 + delta, delta, log_lambda1 }
}

/// Solves the secular equation of `W_c` by bracketing between the poles of
/// `tan mα`, splitting at `arccos(1/c)` when `c > 1`, then bisection and a
/// Newton polish. The root below the band for `0 < c < 1` is computed in
/// logarithmic form.
pub fn secular_solve(spec: &ModelSpec) -> Result<SecularRoots> {
    spec.require_deterministic()?;
    let (m, c) = (spec.m, spec.c);
    if !(c > 0.0) {
        return Err(Error::InvalidParameter("secular equation needs c > 0"));
    }
    let mf = m as f64;
    let mut points: Vec<f64> = Vec::with_capacity(m + 3);
    points.push(0.0);
    points.extend((1..=m).map(|k| (2 * k - 1) as f64 * PI / (2.0 * mf)));
    points.push(PI);
    let alpha_hat = if c > 1.0 { Some((1.0 / c).acos()) } else { None };
    if let Some(ah) = alpha_hat {
        let near = points.iter().any(|p| (p - ah).abs() < 1e-12);
        points.push(if near { ah + 1e-12 } else { ah });
        points.sort_by(f64::total_cmp);
    }
    let values: Vec<f64> = points.iter().map(|&p| secular_g(m, c, p)).collect();
    let mut trig_roots = Vec::with_capacity(m);
    for i in 0..points.len() - 1 {
        let (g0, g1) = (values[i], values[i + 1]);
        if g1 == 0.0 && i + 1 < points.len() - 1 {
            trig_roots.push(points[i + 1]);
        } else if g0 != 0.0 && (g0 > 0.0) != (g1 > 0.0) {
            trig_roots.push(bisect(m, c, points[i], points[i + 1]));
        }
    }
    let hyp_root = if c < 1.0 && mf * (1.0 - c) - c > 0.0 { Some(hyperbolic_root(m, c)) } else { None };
    let found = trig_roots.len() + usize::from(hyp_root.is_some());
    if found != m {
        return Err(Error::RootCountMismatch { found, expected: m });
    }
    Ok(SecularRoots { m, c, trig_roots, hyp_root, alpha_hat })
}

/// Large-`m` asymptotics of the smallest eigenvalue of `W_c`, `0 < c < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpuriousEstimate {
    /// `arcosh((c² + 1)/(2c)) = -ln c`.
    pub alpha0: f64,
    /// `ln(4c) - 2mα₀`.
    pub log_lambda_est: f64,
    pub log_sigma_est: f64,
    /// `ln((1 - c²)²) - 2mα₀`, the leading term of the exact root.
    pub log_lambda_sharp: f64,
    pub log_sigma_sharp: f64,
}

pub fn spurious_estimate(spec: &ModelSpec) -> Result<SpuriousEstimate> {
    spec.require_deterministic()?;
    let c = spec.c;
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::OutOfRegime(c));
    }
    let alpha0 = -c.ln();
    let decay = 2.0 * spec.m as f64 * alpha0;
    let log_lambda_est = (4.0 * c).ln() - decay;
    let log_lambda_sharp = 2.0 * (1.0 - c * c).ln() - decay;
    Ok(SpuriousEstimate {
        alpha0,
        log_lambda_est,
        log_sigma_est: 0.5 * log_lambda_est,
        log_lambda_sharp,
        log_sigma_sharp: 0.5 * log_lambda_sharp,
    })
}

/// The interval `(-2|c - 1|, 2|c - 1|)`, free of eigenvalues of `H_c` for
/// `c ≥ 1` and holding exactly two exponentially small ones for `c < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableGap {
    pub c: f64,
    pub radius: f64,
}

pub fn stable_gap(c: f64) -> Result<StableGap> {
    if !(c >= 0.0) || !c.is_finite() {
        return Err(Error::InvalidParameter("c must be finite and nonnegative"));
    }
    Ok(StableGap { c, radius: 2.0 * (c - 1.0).abs() })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableGapCheck {
    pub m: usize,
    pub inside: usize,
    pub expected_inside: usize,
    /// Smallest modulus among the eigenvalues outside the gap.
    pub min_abs_outside: f64,
    /// `2σmin(T_c)`, the modulus of the inner pair, for `c < 1`.
    pub inner_modulus: Option<f64>,
    /// Upper bound expected for the inner pair.
    pub inner_bound: Option<f64>,
}

impl StableGapCheck {
    pub fn holds(&self) -> bool {
        self.inside == self.expected_inside
            && match (self.inner_modulus, self.inner_bound) {
                (Some(v), Some(b)) => v <= b,
                _ => true,
            }
    }
}

/// Counts eigenvalues of `H_c` strictly inside the gap shrunk by `margin`.
pub fn verify_stable_gap(c: f64, ms: &[usize], margin: f64) -> Result<Vec<StableGapCheck>> {
    let gap = stable_gap(c)?;
    ms.iter()
        .map(|&m| {
            let spec = ModelSpec::new(m, c)?;
            let ev = sym_eigvals(&build_hc(&spec)?)?;
            let cut = gap.radius - margin;
            let inside = ev.iter().filter(|x| x.abs() < cut).count();
            let min_abs_outside = ev.iter().map(|x| x.abs()).filter(|&x| x >= cut).fold(f64::INFINITY, f64::min);
            let (inner_modulus, inner_bound) = if c < 1.0 {
                let s = bidiag_svd_hra(&build_tc(&spec)?)?;
                let modulus = 2.0 * s[s.len() - 1];
                let bound =
                    if c > 0.0 { 2.0 * spurious_estimate(&spec)?.log_sigma_sharp.exp() * (1.0 + 1e-2) } else { margin };
                (Some(modulus), Some(bound))
            } else {
                (None, None)
            };
            let expected_inside = if c < 1.0 { 2 } else { 0 };
            Ok(StableGapCheck { m, inside, expected_inside, min_abs_outside, inner_modulus, inner_bound })
        })
        .collect()
}
