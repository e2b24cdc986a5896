use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

/// Whether the coupling block of the 4×4 family is Hermitian or skew-Hermitian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BSymmetry {
    Hermitian,
    SkewHermitian,
}

/// Parameters of `H = [[A, B], [B*, -A]]` with 2×2 blocks
/// `A = [[a₊, a], [ā, a₋]]` and `B = [[b₊, b], [±b̄, b₋]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quartic4x4Params {
    pub a_plus: f64,
    pub a_minus: f64,
    pub a: Complex64,
    pub b: Complex64,
    pub b_plus: Complex64,
    pub b_minus: Complex64,
    pub symmetry: BSymmetry,
}

impl Quartic4x4Params {
    /// `A = [[2, -1], [-1, 2]]`, `B = diag(1, t)`.
    pub fn kirsch(t: f64) -> Self {
        Quartic4x4Params {
            a_plus: 2.0,
            a_minus: 2.0,
            a: Complex64::new(-1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            b_plus: Complex64::new(1.0, 0.0),
            b_minus: Complex64::new(t, 0.0),
            symmetry: BSymmetry::Hermitian,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.a_plus, self.a_minus, self.a.re, self.a.im, self.b.re, self.b.im]
            .into_iter()
            .chain([self.b_plus.re, self.b_plus.im, self.b_minus.re, self.b_minus.im])
            .all(f64::is_finite);
        if !finite {
            return Err(Error::NotFinite);
        }
        match self.symmetry {
            BSymmetry::Hermitian if self.b_plus.im != 0.0 || self.b_minus.im != 0.0 => {
                Err(Error::InvalidParameter("a Hermitian B needs a real diagonal"))
            }
            BSymmetry::SkewHermitian if self.b_plus.re != 0.0 || self.b_minus.re != 0.0 => {
                Err(Error::InvalidParameter("a skew-Hermitian B needs an imaginary diagonal"))
            }
            _ => Ok(()),
        }
    }

    fn blocks(&self) -> ([[Complex64; 2]; 2], [[Complex64; 2]; 2]) {
        let re = |x: f64| Complex64::new(x, 0.0);
        let a = [[re(self.a_plus), self.a], [self.a.conj(), re(self.a_minus)]];
        let lower = match self.symmetry {
            BSymmetry::Hermitian => self.b.conj(),
            BSymmetry::SkewHermitian => -self.b.conj(),
        };
        let b = [[self.b_plus, self.b], [lower, self.b_minus]];
        (a, b)
    }

    /// The Hermitian 4×4 matrix, row-major.
    pub fn assemble(&self) -> [[Complex64; 4]; 4] {
        let (a, b) = self.blocks();
        let mut h = [[Complex64::new(0.0, 0.0); 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                h[i][j] = a[i][j];
                h[i][j + 2] = b[i][j];
                h[i + 2][j] = b[j][i].conj();
                h[i + 2][j + 2] = -a[i][j];
            }
        }
        h
    }

    /// Real symmetric 8×8 form `[[X, -Y], [Y, X]]` of `H = X + iY`; every
    /// eigenvalue of `H` appears twice.
    pub fn real_embedding(&self) -> DenseMatrix {
        let h = self.assemble();
        DenseMatrix::from_fn(8, 8, |i, j| {
            let z = h[i % 4][j % 4];
            match (i < 4, j < 4) {
                (true, true) | (false, false) => z.re,
                (true, false) => -z.im,
                (false, true) => z.im,
            }
        })
    }

    /// `(p, q)` with characteristic polynomial `λ⁴ - pλ² + q`.
    pub fn characteristic(&self) -> (f64, f64) {
        let (a, b) = self.blocks();
        let frob = |m: &[[Complex64; 2]; 2]| m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>();
        let s = 0.5 * (frob(&a) + frob(&b));
        let kappa = match self.symmetry {
            BSymmetry::Hermitian => Complex64::new(0.0, 1.0),
            BSymmetry::SkewHermitian => Complex64::new(1.0, 0.0),
        };
        let m = |i: usize, j: usize| a[i][j] - kappa * b[i][j];
        let det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        (2.0 * s, det.norm_sqr())
    }
}

/// Eigenvalues of the 4×4 family from its biquadratic characteristic
/// polynomial, ascending.
pub fn eig_4x4(p: &Quartic4x4Params) -> Result<[f64; 4]> {
    p.validate()?;
    let (two_s, d) = p.characteristic();
    let s = 0.5 * two_s;
    let disc = s * s - d;
    if disc < -1e-12 * s * s {
        return Err(Error::NegativeDiscriminant(disc));
    }
    let big = s + disc.max(0.0).sqrt();
    let small = if big > 0.0 { d / big } else { 0.0 };
    let (r1, r2) = (big.sqrt(), small.max(0.0).sqrt());
    Ok([-r1, -r2, r2, r1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sym_eigvals;

    fn zero() -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    #[test]
    fn identity_a() {
        let p = Quartic4x4Params {
            a_plus: 1.0,
            a_minus: 1.0,
            a: zero(),
            b: zero(),
            b_plus: zero(),
            b_minus: zero(),
            symmetry: BSymmetry::Hermitian,
        };
        assert_eq!(eig_4x4(&p).unwrap(), [-1.0, -1.0, 1.0, 1.0]);
    }

    #[test]
    fn kirsch_characteristic() {
        for t in [1.0, 2.5, 5.0] {
            let (p, q) = Quartic4x4Params::kirsch(t).characteristic();
            assert!((p - (11.0 + t * t)).abs() < 1e-13);
            assert!((q - (13.0 + 5.0 * t * t + 2.0 * t)).abs() < 1e-12);
        }
    }

    #[test]
    fn skew_case_matches_embedding() {
        let p = Quartic4x4Params {
            a_plus: 0.7,
            a_minus: -0.3,
            a: Complex64::new(0.2, -0.4),
            b: Complex64::new(-0.5, 0.1),
            b_plus: Complex64::new(0.0, 0.9),
            b_minus: Complex64::new(0.0, -0.6),
            symmetry: BSymmetry::SkewHermitian,
        };
        let ev = eig_4x4(&p).unwrap();
        let emb = sym_eigvals(&p.real_embedding()).unwrap();
        for (i, x) in ev.iter().enumerate() {
            assert!((x - emb[2 * i]).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_inconsistent_diagonal() {
        let mut p = Quartic4x4Params::kirsch(1.0);
        p.symmetry = BSymmetry::SkewHermitian;
        assert!(matches!(eig_4x4(&p), Err(Error::InvalidParameter(_))));
    }
}
