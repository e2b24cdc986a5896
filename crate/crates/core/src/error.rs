use thiserror::Error;

/// Failures reported by the numerical routines.
///
/// Variants that correspond to a violated hypothesis carry enough context to
/// tell the caller which assumption broke.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not symmetric: asymmetry {asymmetry:e} exceeds {tol:e}")]
    NotSymmetric { asymmetry: f64, tol: f64 },
    #[error("matrix contains a NaN or infinite entry")]
    NotFinite,
    #[error("matrix is not positive semidefinite: eigenvalue {min_eig:e}")]
    NotPsd { min_eig: f64 },
    #[error("block {block} is not positive definite: smallest eigenvalue {min_eig:e}")]
    NotDefinite { block: &'static str, min_eig: f64 },
    #[error("matrix is numerically singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("no convergence after {0} sweeps")]
    NoConvergence(usize),
    #[error("B must be square and invertible")]
    BNotInvertible,
    #[error("relative bound is unbounded: B is rank deficient")]
    UnboundedRelativeBound,
    #[error("B must map N(C) one-to-one onto N(A): the block B22 is singular")]
    B22Singular,
    #[error("A and B are both singular: no gap can be certified")]
    BothSemidefiniteSingular,
    #[error("quartic discriminant is negative ({0:e}): inconsistent parameters")]
    NegativeDiscriminant(f64),
    #[error("direction is degenerate: discriminant {0:e} vanishes")]
    DegenerateDirection(f64),
    #[error("N(A) and N(B^T) must intersect trivially")]
    NabViolated,
    #[error("B must have full column rank")]
    RankDeficient,
    #[error("eta must lie in [0, 1), got {0}")]
    EtaOutOfRange(f64),
    #[error("c must lie in (0, 1), got {0}")]
    OutOfRegime(f64),
    #[error("found {found} secular roots, expected {expected}")]
    RootCountMismatch { found: usize, expected: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
