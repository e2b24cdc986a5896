mod common;

use blockgap::gap::func_calc_ac;
use blockgap::linalg::{
    bidiag_svd_hra, format_matrix, inverse, null_space_basis, op_norm, parse_matrix, psd_sqrt, rank, singular_values,
    svd, sym_eig, sym_fn, Bidiagonal, Orientation, Tolerances,
};
use blockgap::DenseMatrix;
use common::*;
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = DenseMatrix> {
    (1usize..=9, 1usize..=9).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #[test]
    fn svd_reconstructs(m in shape()) {
        let d = svd(&m).unwrap();
        prop_assert!((&d.reconstruct() - &m).max_abs() < 1e-13);
        let p = d.singular_values.len();
        let gl = &d.left.t_matmul(&d.left) - &DenseMatrix::identity(p);
        let gr = &d.right.t_matmul(&d.right) - &DenseMatrix::identity(p);
        prop_assert!(gl.max_abs() < 1e-13 && gr.max_abs() < 1e-13);
        prop_assert!(d.singular_values.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(&d.singular_values, &singular_values(&m).unwrap());
    }

    #[test]
    fn eigen_reconstructs(a in (1usize..=9).prop_flat_map(symmetric)) {
        let e = sym_eig(&a).unwrap();
        let back = e.apply_fn(|x| x);
        prop_assert!((&back - &a).max_abs() < 1e-13);
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn null_space_and_rank((g, h) in low_rank_factors()) {
        let (n, r) = (h.cols(), h.rows());
        let m = g.matmul(&h);
        let tol = 1e-10;
        prop_assert_eq!(rank(&m, tol).unwrap(), r);
        let z = null_space_basis(&m, tol).unwrap();
        prop_assert_eq!(z.cols(), n - r);
        prop_assert!(m.matmul(&z).max_abs() < 1e-12);
    }

    #[test]
    fn hra_matches_dense_for_moderate_entries(
        (d, e) in (1usize..=10).prop_flat_map(|n| (prop::collection::vec(0.1f64..2.0, n), prop::collection::vec(0.1f64..2.0, n - 1))),
        lower in any::<bool>(),
    ) {
        let orientation = if lower { Orientation::Lower } else { Orientation::Upper };
        let b = Bidiagonal::new(d, e, orientation).unwrap();
        let hra = bidiag_svd_hra(&b).unwrap();
        let dense = singular_values(&b.to_dense()).unwrap();
        for (x, y) in hra.iter().zip(&dense) {
            prop_assert!((x - y).abs() < 1e-12 * dense[0]);
        }
    }

    #[test]
    fn inverse_and_text_round_trip(m in (1usize..=7).prop_flat_map(pd)) {
        let inv = inverse(&m).unwrap();
        prop_assert!((&m.matmul(&inv) - &DenseMatrix::identity(m.rows())).max_abs() < 1e-9);
        prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m.clone());
        let half = psd_sqrt(&m, Tolerances::default()).unwrap();
        prop_assert!((&half.matmul(&half) - &m).max_abs() < 1e-12);
    }
}

fn low_rank_factors() -> impl Strategy<Value = (DenseMatrix, DenseMatrix)> {
    (2usize..=7, 0usize..=3)
        .prop_flat_map(|(n, extra)| (Just(n), 0..=n, Just(extra)))
        .prop_flat_map(|(n, r, extra)| (matrix(n + extra, r), matrix(r, n)))
}

fn exp_oracle(a: &DenseMatrix, c: &DenseMatrix, t: f64) -> DenseMatrix {
    let tol = Tolerances::default();
    let half = psd_sqrt(a, tol).unwrap();
    let inner = half.matmul(c).matmul(&half).symmetrized();
    let e = sym_fn(&inner, |x| (-t * x).exp()).unwrap();
    half.matmul(&e).matmul(&inverse(&half).unwrap())
}

fn exp_divided(t: f64) -> impl FnMut(f64) -> f64 {
    move |x| if x == 0.0 { -t } else { (-t * x).exp_m1() / x }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn exponential_via_functional_calculus(
        (g, c) in (1usize..=6).prop_flat_map(|n| (matrix(n, n), (0..=n).prop_flat_map(move |r| psd(n, r)))),
    ) {
        let a = g.t_matmul(&g).symmetrized().shift_diag(0.01);
        let tol = Tolerances::default();
        let c_half = psd_sqrt(&c, tol).unwrap();
        let growth = op_norm(&a.matmul(&c_half)).unwrap() * op_norm(&c_half).unwrap();
        for t in [0.1, 1.0, 10.0] {
            let f = func_calc_ac(&a, &c, 1.0, exp_divided(t), tol).unwrap();
            let oracle = exp_oracle(&a, &c, t);
            let scale = oracle.max_abs().max(1.0);
            prop_assert!((&f - &oracle).max_abs() < 1e-9 * scale, "t = {t}");
            prop_assert!(op_norm(&f).unwrap() <= (1.0 + t * growth) * (1.0 + 1e-12));
        }
    }
}
