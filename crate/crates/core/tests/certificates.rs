mod common;

use blockgap::gap::{
    diag_gap, eig_4x4, hbinv_certificate, hbinv_scaled_bound, inv_iplusac_bound, kirsch_certificate,
    kirsch_certificate_for, relative_bounds, stretch_certificate, verify_norm_floor, winklmeier_certificate,
    zero_dichotomy_certificate, BSymmetry, BlockSaddle, Claim, GapCertificate, Quartic4x4Params,
};
use blockgap::linalg::{inverse, op_norm, singular_values, sym_eigvals, Tolerances};
use blockgap::stokes::{new_gap_estimate, StokesMatrix};
use blockgap::DenseMatrix;
use common::*;
use num_complex::Complex64;
use proptest::prelude::*;

const MARGIN: f64 = 1e-10;

fn check(cert: &GapCertificate, h: &DenseMatrix) -> Result<(), TestCaseError> {
    let ev = sym_eigvals(h).unwrap();
    let bad = cert.violations(&ev, MARGIN);
    prop_assert!(bad.is_empty(), "{} certificate {:?} contains {:?}", cert.method, cert.interval(), bad);
    if let Some(bound) = cert.inv_norm_bound {
        let mut nonzero = ev.clone();
        if cert.claim == Claim::KernelOnly {
            nonzero.retain(|x| x.abs() > MARGIN);
        }
        prop_assert!(1.0 / min_abs(&nonzero) <= bound * (1.0 + 1e-9), "{}: inverse bound {bound}", cert.method);
    }
    Ok(())
}

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=8, 1usize..=8)
}

fn definite_saddle() -> impl Strategy<Value = BlockSaddle> {
    dims().prop_flat_map(|(m, k)| (pd(m), matrix(m, k), pd(k))).prop_map(|(a, b, c)| BlockSaddle::new(a, b, c).unwrap())
}

fn square_b_saddle() -> impl Strategy<Value = BlockSaddle> {
    (1usize..=8)
        .prop_flat_map(|m| (0..=m, 0..=m, Just(m)))
        .prop_flat_map(|(ra, rc, m)| (psd(m, ra), matrix(m, m), psd(m, rc)))
        .prop_map(|(a, b, c)| BlockSaddle::new(a, b, c).unwrap())
}

fn equal_nullity_saddle() -> impl Strategy<Value = BlockSaddle> {
    dims()
        .prop_flat_map(|(m, k)| (0..=m.min(k), Just((m, k))))
        .prop_flat_map(|(d, (m, k))| (psd(m, m - d), matrix(m, k), psd(k, k - d)))
        .prop_map(|(a, b, c)| BlockSaddle::new(a, b, c).unwrap())
}

fn kirsch_pair() -> impl Strategy<Value = (DenseMatrix, DenseMatrix)> {
    (1usize..=8, any::<bool>())
        .prop_flat_map(|(n, a_definite)| (0..=n, Just((n, a_definite))))
        .prop_flat_map(|(r, (n, a_definite))| (psd(n, r), pd(n), Just(a_definite)))
        .prop_map(|(semi, def, a_definite)| if a_definite { (def, semi) } else { (semi, def) })
}

fn wide_stokes() -> impl Strategy<Value = StokesMatrix> {
    (1usize..=6)
        .prop_flat_map(|m| (Just(m), m..=8))
        .prop_flat_map(|(m, k)| (0..=m, Just((m, k))))
        .prop_flat_map(|(r, (m, k))| (psd(m, r), matrix(m, k)))
        .prop_map(|(a, b)| StokesMatrix::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn diag_and_stretch_are_sound(h in definite_saddle()) {
        let full = h.assemble();
        let diag = diag_gap(&h).unwrap();
        let stretch = stretch_certificate(&h).unwrap();
        check(&diag, &full)?;
        check(&stretch, &full)?;
        prop_assert!(stretch.lo <= diag.lo + 1e-14 && diag.hi <= stretch.hi + 1e-14);
    }

    #[test]
    fn hbinv_and_winklmeier_are_sound(h in square_b_saddle()) {
        let s = singular_values(h.b()).unwrap();
        prop_assume!(s[s.len() - 1] > 1e-3);
        let full = h.assemble();
        check(&hbinv_certificate(&h).unwrap(), &full)?;
        check(&winklmeier_certificate(&h).unwrap(), &full)?;
    }

    #[test]
    fn zero_dichotomy_is_sound(h in equal_nullity_saddle()) {
        match zero_dichotomy_certificate(&h) {
            Ok(cert) => check(&cert, &h.assemble())?,
            Err(e) => prop_assert!(false, "unexpected failure {e}"),
        }
    }

    #[test]
    fn kirsch_is_sound((a, b) in kirsch_pair()) {
        let h = BlockSaddle::new(a.clone(), b.clone(), a.clone()).unwrap();
        let cert = kirsch_certificate_for(&h).unwrap();
        prop_assert_eq!(&cert, &kirsch_certificate(&a, &b, Tolerances::default()).unwrap());
        check(&cert, &h.assemble())?;
    }

    #[test]
    fn stokes_new_is_sound(s in wide_stokes()) {
        let sv = singular_values(s.b()).unwrap();
        prop_assume!(sv[s.m() - 1] > 1e-3);
        check(&new_gap_estimate(&s).unwrap(), &s.assemble())?;
    }
}

proptest! {
    #[test]
    fn hbinv_scaling_bounds_every_t(h in square_b_saddle(), t in 0.1f64..10.0) {
        let s = singular_values(h.b()).unwrap();
        prop_assume!(s[s.len() - 1] > 1e-2);
        let rb = relative_bounds(&h).unwrap();
        let b_inv = 1.0 / s[s.len() - 1];
        let bound = hbinv_scaled_bound(&rb, b_inv, t).unwrap();
        prop_assert!(hbinv_scaled_bound(&rb, b_inv, 1.1 * t).unwrap() < bound);
        let scaled = h.scale_b(t).assemble();
        let inv_norm = op_norm(&inverse(&scaled).unwrap()).unwrap();
        prop_assert!(inv_norm <= bound * (1.0 + 1e-9));
    }

    #[test]
    fn inverse_of_i_plus_ac((a, c, ra, rc) in psd_pair()) {
        let n = a.rows();
        let tol = Tolerances::default();
        let bound = inv_iplusac_bound(&a, &c, tol).unwrap();
        let m = &DenseMatrix::identity(n) + &a.matmul(&c);
        let actual = op_norm(&inverse(&m).unwrap()).unwrap();
        prop_assert!(actual <= bound * (1.0 + 1e-9), "{actual} > {bound}");
        let (norm, vanishes) = verify_norm_floor(&a, &c, tol).unwrap();
        prop_assert!(norm >= 1.0 - 1e-12);
        prop_assert_eq!(vanishes, ra == 0 || rc == 0);
    }

    #[test]
    fn kirsch_spectrum_is_symmetric(a in symmetric(5), b in symmetric(5)) {
        let h = DenseMatrix::from_blocks(&a, &b, &b, &a.scale(-1.0));
        let ev = sym_eigvals(&h).unwrap();
        for i in 0..ev.len() {
            prop_assert!((ev[i] + ev[ev.len() - 1 - i]).abs() < 1e-12);
        }
    }
}

fn psd_pair() -> impl Strategy<Value = (DenseMatrix, DenseMatrix, usize, usize)> {
    (1usize..=6)
        .prop_flat_map(|n| (0..=n, 0..=n, Just(n)))
        .prop_flat_map(|(ra, rc, n)| (psd(n, ra), psd(n, rc), Just(ra), Just(rc)))
}

fn quartic_params() -> impl Strategy<Value = Quartic4x4Params> {
    let c = || (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im));
    (-2.0f64..2.0, -2.0f64..2.0, c(), c(), -2.0f64..2.0, -2.0f64..2.0, any::<bool>()).prop_map(
        |(a_plus, a_minus, a, b, bp, bm, skew)| {
            let (b_plus, b_minus, symmetry) = if skew {
                (Complex64::new(0.0, bp), Complex64::new(0.0, bm), BSymmetry::SkewHermitian)
            } else {
                (Complex64::new(bp, 0.0), Complex64::new(bm, 0.0), BSymmetry::Hermitian)
            };
            Quartic4x4Params { a_plus, a_minus, a, b, b_plus, b_minus, symmetry }
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quartic_roots_match_real_embedding(p in quartic_params()) {
        let ev = eig_4x4(&p).unwrap();
        let emb = sym_eigvals(&p.real_embedding()).unwrap();
        for (i, x) in ev.iter().enumerate() {
            prop_assert!((x - emb[2 * i]).abs() < 1e-10 && (x - emb[2 * i + 1]).abs() < 1e-10, "{ev:?} vs {emb:?}");
        }
    }
}

#[test]
fn hbinv_on_pure_coupling_is_exact() {
    let h = BlockSaddle::new(DenseMatrix::zeros(3, 3), DenseMatrix::identity(3), DenseMatrix::zeros(3, 3)).unwrap();
    let cert = hbinv_certificate(&h).unwrap();
    assert_eq!(cert.interval(), (-1.0, 1.0));
    assert_eq!(cert.inv_norm_bound, Some(1.0));
}

#[test]
fn kirsch_example_diag_gap() {
    let a = DenseMatrix::from_rows(&[[2.0, -1.0], [-1.0, 2.0]]);
    let h = BlockSaddle::new(a.clone(), DenseMatrix::identity(2), a).unwrap();
    let cert = diag_gap(&h).unwrap();
    assert!((cert.lo + 1.0).abs() < 1e-14 && (cert.hi - 1.0).abs() < 1e-14);
    let k = kirsch_certificate_for(&h).unwrap();
    assert!((k.hi - 2f64.sqrt()).abs() < 1e-14);
}
