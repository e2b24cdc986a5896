use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{build_hc, build_u, ModelSpec};
use crate::error::Result;
use crate::linalg::DenseMatrix;

/// Boundary-modified matrices `(K̃, H̃)`.
///
/// `H̃ = H + [[E₁ - E_m, E₁ + E_m], [E₁ + E_m, E₁ - E_m]]` with
/// `Eᵢ = eᵢeᵢᵀ`, and `K̃ = U·H̃·U`, which for the clean model equals
/// `2[[E₁, T_c], [T_cᵀ, -E_m]]`. The modification removes the two spurious
/// eigenvalues near zero.
pub fn build_modified(spec: &ModelSpec) -> Result<(DenseMatrix, DenseMatrix)> {
    let m = spec.m;
    let mut h = build_hc(spec)?;
    let last = m - 1;
    h[(0, 0)] += 1.0;
    h[(last, last)] -= 1.0;
    h[(m, m)] += 1.0;
    h[(m + last, m + last)] -= 1.0;
    h[(0, m)] += 1.0;
    h[(m, 0)] += 1.0;
    h[(last, m + last)] += 1.0;
    h[(m + last, last)] += 1.0;
    let u = build_u(m);
    let k = u.matmul(&h).matmul(&u).symmetrized();
    Ok((k, h))
}

/// Eigenvalues of `H̃_c²`, ascending: `4 + 4c² - 4c·κ_k` with
/// `κ_k = -2cos((2k - 1)π/(2m))`, each twice.
pub fn modified_spectrum_closed_form(spec: &ModelSpec) -> Result<Vec<f64>> {
    spec.require_deterministic()?;
    let (m, c) = (spec.m, spec.c);
    let mut out: Vec<f64> = (1..=m)
        .flat_map(|k| {
            let kappa = -2.0 * ((2 * k - 1) as f64 * core::f64::consts::PI / (2 * m) as f64).cos();
            let v = 4.0 + 4.0 * c * c - 4.0 * c * kappa;
            [v, v]
        })
        .collect();
    out.sort_by(f64::total_cmp);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sym_eigvals;
    use crate::model::build_tc;

    #[test]
    fn c_zero_squares_to_four() {
        for m in [2, 3, 7] {
            let (k, _) = build_modified(&ModelSpec::new(m, 0.0).unwrap()).unwrap();
            let diff = &k.matmul(&k) - &DenseMatrix::identity(2 * m).scale(4.0);
            assert!(diff.max_abs() < 1e-12);
        }
    }

    #[test]
    fn k_tilde_explicit_form() {
        let spec = ModelSpec::new(4, 0.6).unwrap();
        let (k, _) = build_modified(&spec).unwrap();
        let t = build_tc(&spec).unwrap().to_dense();
        let mut e1 = DenseMatrix::zeros(4, 4);
        e1[(0, 0)] = 1.0;
        let mut em = DenseMatrix::zeros(4, 4);
        em[(3, 3)] = -1.0;
        let expected = DenseMatrix::from_blocks(&e1, &t, &t.transpose(), &em).scale(2.0);
        assert!((&k - &expected).max_abs() < 1e-14);
    }

    #[test]
    fn m2_c1_closed_form() {
        let spec = ModelSpec::new(2, 1.0).unwrap();
        let (_, h) = build_modified(&spec).unwrap();
        let ev = sym_eigvals(&h.matmul(&h)).unwrap();
        let cf = modified_spectrum_closed_form(&spec).unwrap();
        let r = 4.0 * 2f64.sqrt();
        assert!((cf[0] - (8.0 - r)).abs() < 1e-13 && (cf[3] - (8.0 + r)).abs() < 1e-13);
        for (x, y) in ev.iter().zip(&cf) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
