#![allow(dead_code)]

use blockgap::DenseMatrix;
use proptest::prelude::*;

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = DenseMatrix> {
    prop::collection::vec(-1.0f64..1.0, rows * cols).prop_map(move |v| DenseMatrix::from_vec(rows, cols, v).unwrap())
}

/// `GGᵀ` with `G` of size `n × rank`.
pub fn psd(n: usize, rank: usize) -> impl Strategy<Value = DenseMatrix> {
    matrix(n, rank).prop_map(|g| g.matmul_t(&g).symmetrized())
}

pub fn pd(n: usize) -> impl Strategy<Value = DenseMatrix> {
    (psd(n, n), 0.05f64..1.0).prop_map(|(a, s)| a.shift_diag(s))
}

pub fn symmetric(n: usize) -> impl Strategy<Value = DenseMatrix> {
    matrix(n, n).prop_map(|g| (&g + &g.transpose()).scale(0.5))
}

pub fn unit_vector(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, n)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-4)
        .prop_map(|v| {
            let s = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.into_iter().map(|x| x / s).collect()
        })
}

pub fn min_abs(ev: &[f64]) -> f64 {
    ev.iter().fold(f64::INFINITY, |m, x| m.min(x.abs()))
}
