//! Dense real linear algebra.

mod bidiag;
mod eigen;
mod lu;
mod matrix;
mod psd;
mod svd;
mod text;

pub use bidiag::{bidiag_svd_hra, Bidiagonal, Orientation};
pub use eigen::{sym_eig, sym_eigvals, EigenDecomposition, SYM_TOL};
pub use lu::{inverse, solve, Lu};
pub use matrix::DenseMatrix;
pub use psd::{check_psd, complex_svd_via_embedding, psd_factor, psd_sqrt, sym_fn};
pub use svd::{
    default_rank_tol, null_space_basis, op_norm, polar_factors, rank, singular_values, svd, SingularDecomposition,
};

pub use text::{format_matrix, parse_matrix};

pub(crate) use matrix::dot;
pub(crate) use text::{parse_dims, read_body, read_matrix, write_matrix, Lines};

/// Numerical thresholds that decide rank and semidefiniteness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative rank threshold; `None` means `n·2⁻⁵²` for an order-`n` problem.
    pub rank: Option<f64>,
    /// Relative threshold below which a negative eigenvalue still counts as zero.
    pub psd: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { rank: None, psd: 1e-10 }
    }
}

impl Tolerances {
    pub fn rank_for(&self, n: usize) -> f64 {
        self.rank.unwrap_or(n.max(1) as f64 * f64::EPSILON)
    }
}
