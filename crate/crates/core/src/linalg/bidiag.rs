use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Lower,
    Upper,
}

/// Square bidiagonal matrix: `diag` on the main diagonal and `offdiag` on the
/// sub- (lower) or super- (upper) diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Bidiagonal {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub orientation: Orientation,
}

impl Bidiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>, orientation: Orientation) -> Result<Self> {
        if !diag.is_empty() && offdiag.len() + 1 != diag.len() || diag.is_empty() && !offdiag.is_empty() {
            return Err(Error::DimensionMismatch("off-diagonal must have length n - 1"));
        }
        Ok(Bidiagonal { diag, offdiag, orientation })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn transpose(&self) -> Self {
        let orientation = match self.orientation {
            Orientation::Lower => Orientation::Upper,
            Orientation::Upper => Orientation::Lower,
        };
        Bidiagonal { diag: self.diag.clone(), offdiag: self.offdiag.clone(), orientation }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.order();
        let mut m = DenseMatrix::from_diag(&self.diag);
        for (i, &e) in self.offdiag.iter().enumerate() {
            match self.orientation {
                Orientation::Lower => m[(i + 1, i)] = e,
                Orientation::Upper => m[(i, i + 1)] = e,
            }
        }
        debug_assert_eq!(m.rows(), n);
        m
    }
}

/// All singular values of a bidiagonal matrix to high relative accuracy,
/// descending.
///
/// Implicit QR in the Demmel–Kahan form: zero-shift sweeps whenever a shift
/// would spoil relative accuracy, direction chosen from the larger end, and
/// relative convergence tests on the off-diagonal. A lower bidiagonal input
/// is processed as its transpose, which is upper bidiagonal with the same
/// entries and the same singular values.
pub fn bidiag_svd_hra(t: &Bidiagonal) -> Result<Vec<f64>> {
    if t.diag.iter().chain(&t.offdiag).any(|x| !x.is_finite()) {
        return Err(Error::NotFinite);
    }
    let mut d = t.diag.clone();
    let mut e = t.offdiag.clone();
    qr_sweeps(&mut d, &mut e)?;
    for x in &mut d {
        *x = x.abs();
    }
    d.sort_by(|a, b| b.total_cmp(a));
    Ok(d)
}

const MAXITR: usize = 6;

#[allow(clippy::many_single_char_names)]
fn qr_sweeps(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let eps = f64::EPSILON * 0.5;
    let unfl = f64::MIN_POSITIVE;
    let tol = 10f64.max(100f64.min(eps.powf(-0.125))) * eps;
    let nf = n as f64;

    let mut sminoa = d[0].abs();
    if sminoa != 0.0 {
        let mut mu = sminoa;
        for i in 1..n {
            mu = d[i].abs() * (mu / (mu + e[i - 1].abs()));
            sminoa = sminoa.min(mu);
            if sminoa == 0.0 {
                break;
            }
        }
    }
    sminoa /= nf.sqrt();
    let thresh = (tol * sminoa).max(MAXITR as f64 * nf * nf * unfl);

    let maxit = MAXITR * n * n;
    let mut iter = 0usize;
    let mut oldll: Option<usize> = None;
    let mut oldm: Option<usize> = None;
    let mut idir = 0u8;
    let mut m = n;

    while m > 1 {
        if iter > maxit {
            return Err(Error::NoConvergence(iter));
        }
        // locate the bottom unreduced block d[ll..m]
        let mut smax = d[m - 1].abs();
        let mut ll = 0;
        let mut split = false;
        for lll in 1..m {
            ll = m - lll - 1;
            let abss = d[ll].abs();
            let abse = e[ll].abs();
            if abse <= thresh {
                split = true;
                break;
            }
            smax = smax.max(abss).max(abse);
        }
        if split {
            e[ll] = 0.0;
            if ll == m - 2 {
                m -= 1;
                continue;
            }
            ll += 1;
        } else {
            ll = 0;
        }

        if ll == m - 2 {
            let (smin2, smax2) = las2(d[m - 2], e[m - 2], d[m - 1]);
            d[m - 2] = smax2;
            e[m - 2] = 0.0;
            d[m - 1] = smin2;
            m -= 2;
            continue;
        }

        if oldm.is_none_or(|om| ll > om) || oldll.is_none_or(|ol| m < ol) {
            idir = if d[ll].abs() >= d[m - 1].abs() { 1 } else { 2 };
        }

        let mut smin;
        if idir == 1 {
            if e[m - 2].abs() <= tol * d[m - 1].abs() {
                e[m - 2] = 0.0;
                continue;
            }
            let mut mu = d[ll].abs();
            smin = mu;
            let mut conv = false;
            for lll in ll..m - 1 {
                if e[lll].abs() <= tol * mu {
                    e[lll] = 0.0;
                    conv = true;
                    break;
                }
                mu = d[lll + 1].abs() * (mu / (mu + e[lll].abs()));
                smin = smin.min(mu);
            }
            if conv {
                continue;
            }
        } else {
            if e[ll].abs() <= tol * d[ll].abs() {
                e[ll] = 0.0;
                continue;
            }
            let mut mu = d[m - 1].abs();
            smin = mu;
            let mut conv = false;
            for lll in (ll..m - 1).rev() {
                if e[lll].abs() <= tol * mu {
                    e[lll] = 0.0;
                    conv = true;
                    break;
                }
                mu = d[lll].abs() * (mu / (mu + e[lll].abs()));
                smin = smin.min(mu);
            }
            if conv {
                continue;
            }
        }
        oldll = Some(ll);
        oldm = Some(m);

        let shift = if nf * tol * (smin / smax) <= eps.max(0.01 * tol) {
            0.0
        } else {
            let (s, sll) = if idir == 1 {
                (las2(d[m - 2], e[m - 2], d[m - 1]).0, d[ll].abs())
            } else {
                (las2(d[ll], e[ll], d[ll + 1]).0, d[m - 1].abs())
            };
            if sll > 0.0 && (s / sll) * (s / sll) < eps {
                0.0
            } else {
                s
            }
        };
        iter += m - ll;

        if shift == 0.0 {
            if idir == 1 {
                let mut cs = 1.0;
                let mut oldcs = 1.0;
                let mut oldsn = 0.0;
                for i in ll..m - 1 {
                    let (c1, sn, r) = lartg(d[i] * cs, e[i]);
                    cs = c1;
                    if i > ll {
                        e[i - 1] = oldsn * r;
                    }
                    let (oc, os, dn) = lartg(oldcs * r, d[i + 1] * sn);
                    oldcs = oc;
                    oldsn = os;
                    d[i] = dn;
                }
                let h = d[m - 1] * cs;
                d[m - 1] = h * oldcs;
                e[m - 2] = h * oldsn;
                if e[m - 2].abs() <= thresh {
                    e[m - 2] = 0.0;
                }
            } else {
                let mut cs = 1.0;
                let mut oldcs = 1.0;
                let mut oldsn = 0.0;
                for i in (ll + 1..m).rev() {
                    let (c1, sn, r) = lartg(d[i] * cs, e[i - 1]);
                    cs = c1;
                    if i < m - 1 {
                        e[i] = oldsn * r;
                    }
                    let (oc, os, dn) = lartg(oldcs * r, d[i - 1] * sn);
                    oldcs = oc;
                    oldsn = os;
                    d[i] = dn;
                }
                let h = d[ll] * cs;
                d[ll] = h * oldcs;
                e[ll] = h * oldsn;
                if e[ll].abs() <= thresh {
                    e[ll] = 0.0;
                }
            }
        } else if idir == 1 {
            let mut f = (d[ll].abs() - shift) * (sign(1.0, d[ll]) + shift / d[ll]);
            let mut g = e[ll];
            for i in ll..m - 1 {
                let (cosr, sinr, r) = lartg(f, g);
                if i > ll {
                    e[i - 1] = r;
                }
                f = cosr * d[i] + sinr * e[i];
                e[i] = cosr * e[i] - sinr * d[i];
                g = sinr * d[i + 1];
                d[i + 1] *= cosr;
                let (cosl, sinl, r) = lartg(f, g);
                d[i] = r;
                f = cosl * e[i] + sinl * d[i + 1];
                d[i + 1] = cosl * d[i + 1] - sinl * e[i];
                if i < m - 2 {
                    g = sinl * e[i + 1];
                    e[i + 1] *= cosl;
                }
            }
            e[m - 2] = f;
            if e[m - 2].abs() <= thresh {
                e[m - 2] = 0.0;
            }
        } else {
            let mut f = (d[m - 1].abs() - shift) * (sign(1.0, d[m - 1]) + shift / d[m - 1]);
            let mut g = e[m - 2];
            for i in (ll + 1..m).rev() {
                let (cosr, sinr, r) = lartg(f, g);
                if i < m - 1 {
                    e[i] = r;
                }
                f = cosr * d[i] + sinr * e[i - 1];
                e[i - 1] = cosr * e[i - 1] - sinr * d[i];
                g = sinr * d[i - 1];
                d[i - 1] *= cosr;
                let (cosl, sinl, r) = lartg(f, g);
                d[i] = r;
                f = cosl * e[i - 1] + sinl * d[i - 1];
                d[i - 1] = cosl * d[i - 1] - sinl * e[i - 1];
                if i > ll + 1 {
                    g = sinl * e[i - 2];
                    e[i - 2] *= cosl;
                }
            }
            e[ll] = f;
            if e[ll].abs() <= thresh {
                e[ll] = 0.0;
            }
        }
    }
    Ok(())
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Plane rotation with `[c s; -s c]·[f; g] = [r; 0]`.
fn lartg(f: f64, g: f64) -> (f64, f64, f64) {
    if g == 0.0 {
        (1.0, 0.0, f)
    } else if f == 0.0 {
        (0.0, sign(1.0, g), g.abs())
    } else {
        let d = f.hypot(g);
        let r = sign(d, f);
        (f.abs() / d, g / r, r)
    }
}

/// Singular values `(min, max)` of the upper triangular `[[f, g], [0, h]]`.
fn las2(f: f64, g: f64, h: f64) -> (f64, f64) {
    let fa = f.abs();
    let ga = g.abs();
    let ha = h.abs();
    let fhmn = fa.min(ha);
    let fhmx = fa.max(ha);
    if fhmn == 0.0 {
        let smax = if fhmx == 0.0 {
            ga
        } else {
            let (big, small) = if fhmx > ga { (fhmx, ga) } else { (ga, fhmx) };
            big * (1.0 + (small / big) * (small / big)).sqrt()
        };
        (0.0, smax)
    } else if ga < fhmx {
        let as_ = 1.0 + fhmn / fhmx;
        let at = (fhmx - fhmn) / fhmx;
        let au = (ga / fhmx) * (ga / fhmx);
        let c = 2.0 / ((as_ * as_ + au).sqrt() + (at * at + au).sqrt());
        (fhmn * c, fhmx / c)
    } else {
        let au = fhmx / ga;
        if au == 0.0 {
            ((fhmn * fhmx) / ga, ga)
        } else {
            let as_ = 1.0 + fhmn / fhmx;
            let at = (fhmx - fhmn) / fhmx;
            let c = 1.0 / ((1.0 + (as_ * au) * (as_ * au)).sqrt() + (1.0 + (at * au) * (at * au)).sqrt());
            let smin = 2.0 * (fhmn * c) * au;
            (smin, ga / (c + c))
        }
    }
}
