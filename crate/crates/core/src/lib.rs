//! Certified spectral gaps at zero for Hermitian block matrices.
//!
//! The crate works with real dense matrices of the shape
//! `H = [[A, B], [Bᵀ, -C]]` and produces intervals around the origin that
//! provably contain no eigenvalue of `H`, together with bounds on `‖H⁻¹‖`.
//! Besides the general certificates it covers Stokes matrices (`C = 0`), a
//! tight-binding model with its secular equations, and the dense linear
//! algebra all of that needs.
//!
//! Everything is `no_std` and only needs an allocator.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod gap;
pub mod linalg;
pub mod model;
pub mod stokes;

pub use error::{Error, Result};
pub use linalg::DenseMatrix;
