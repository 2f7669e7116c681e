//! Integral symplectic matrices: the image of the mapping class group in
//! `Sp(2g; Z)` acting on first homology.
//!
//! Coordinates are ordered `(a_1..a_g, b_1..b_g)` and the symplectic form is
//! `J = [[0, I_g], [-I_g, 0]]`. Every sign below follows from that choice; the
//! opposite orientation convention flips the sign of the signature cocycle.

mod sl2;

pub use sl2::{sl2_word, Generator, Letter, SL2Word, Syllable};
pub(crate) use sl2::syllable_element;

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{text, ExactError, Matrix};
use crate::scalar::Scalar;
use crate::{IntMatrix, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("matrix must be square of even size at least 2, got {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("matrix does not preserve the standard symplectic form")]
    NotSymplectic,
    #[error("matrix is not in SL(2;Z) (det = {det})")]
    NotUnimodular { det: String },
    #[error("transvection vector must be nonzero")]
    ZeroVector,
    #[error("vector length {found} does not match 2g = {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },
    #[error("invalid SL(2;Z) word: {0}")]
    BadWord(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `J_g = [[0, I_g], [-I_g, 0]]`.
pub fn standard_j<T: Scalar>(g: usize) -> Matrix<T> {
    Matrix::from_fn(2 * g, 2 * g, |i, j| {
        if j == i + g {
            T::one()
        } else if i == j + g {
            -T::one()
        } else {
            T::zero()
        }
    })
}

/// `J_g` over the rationals.
pub fn standard_j_rat(g: usize) -> RatMatrix {
    standard_j(g)
}

/// An element of `Sp(2g; Z)`: `ᵗA J A = J` holds for every value of this type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticElement {
    genus: usize,
    mat: IntMatrix,
}

impl SymplecticElement {
    pub fn new(mat: IntMatrix) -> Result<Self, SymplecticError> {
        let (rows, cols) = (mat.rows(), mat.cols());
        if rows != cols || rows == 0 || rows % 2 != 0 {
            return Err(SymplecticError::BadShape { rows, cols });
        }
        let genus = rows / 2;
        if genus == 1 {
            let det = mat.det()?;
            if !det.is_one() {
                return Err(SymplecticError::NotUnimodular {
                    det: det.to_string(),
                });
            }
        }
        let j = standard_j::<BigInt>(genus);
        if &(&mat.transpose() * &j) * &mat != j {
            return Err(SymplecticError::NotSymplectic);
        }
        Ok(Self { genus, mat })
    }

    /// Reads a matrix in the plain-text format; the genus is half the size.
    pub fn parse(text: &str) -> Result<Self, SymplecticError> {
        Self::new(text::parse_int_matrix(text)?)
    }

    pub fn from_rows<const N: usize>(rows: [[i64; N]; N]) -> Result<Self, SymplecticError> {
        Self::new(IntMatrix::from_rows(
            rows.map(|r| r.map(BigInt::from).to_vec()),
        ))
    }

    pub fn identity(genus: usize) -> Self {
        assert!(genus >= 1, "genus must be positive");
        Self {
            genus,
            mat: IntMatrix::identity(2 * genus),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.mat
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.mat.map(|x| Rational::from_integer(x.clone()))
    }

    pub fn is_identity(&self) -> bool {
        self.mat == IntMatrix::identity(2 * self.genus)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, SymplecticError> {
        self.same_genus(rhs)?;
        Ok(Self {
            genus: self.genus,
            mat: &self.mat * &rhs.mat,
        })
    }

    pub(crate) fn same_genus(&self, rhs: &Self) -> Result<(), SymplecticError> {
        if self.genus != rhs.genus {
            return Err(SymplecticError::GenusMismatch {
                left: self.genus,
                right: rhs.genus,
            });
        }
        Ok(())
    }

    /// `A^{-1} = J^{-1} ᵗA J`, with `J^{-1} = -J`.
    pub fn inverse(&self) -> Self {
        let j = standard_j::<BigInt>(self.genus);
        let inv = -&(&(&j * &self.mat.transpose()) * &j);
        Self {
            genus: self.genus,
            mat: inv,
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::identity(self.genus);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// `B A B^{-1}`
    pub fn conjugate_by(&self, b: &Self) -> Result<Self, SymplecticError> {
        b.checked_mul(self)?.checked_mul(&b.inverse())
    }

    /// The symplectic pairing `ω(x, y) = ᵗx J y`.
    pub fn omega(x: &[BigInt], y: &[BigInt]) -> BigInt {
        let g = x.len() / 2;
        (0..g).fold(BigInt::zero(), |acc, i| {
            acc + &x[i] * &y[g + i] - &x[g + i] * &y[i]
        })
    }

    /// Matrix of `x ↦ x + k·ω(x, v)·v`.
    pub fn transvection_power(v: &[BigInt], k: i64) -> Result<Self, SymplecticError> {
        if v.is_empty() || !v.len().is_multiple_of(2) {
            return Err(SymplecticError::VectorLength {
                expected: v.len() + v.len() % 2,
                found: v.len(),
            });
        }
        if v.iter().all(Zero::is_zero) {
            return Err(SymplecticError::ZeroVector);
        }
        let genus = v.len() / 2;
        // ω(x, v) = ᵗ(Jv) x
        let jv = standard_j::<BigInt>(genus).mul_vec(v);
        let k = BigInt::from(k);
        let mat = IntMatrix::from_fn(2 * genus, 2 * genus, |i, j| {
            let delta = if i == j { BigInt::one() } else { BigInt::zero() };
            delta + &k * &v[i] * &jv[j]
        });
        Ok(Self { genus, mat })
    }

    /// Matrix of `x ↦ x + ω(x, v)·v`. For `g = 1` and `v = e_1` this is
    /// `[[1, -1], [0, 1]]`, the homology image of the inverse of a right-handed
    /// Dehn twist about the curve dual to `v`.
    pub fn transvection(v: &[BigInt]) -> Result<Self, SymplecticError> {
        Self::transvection_power(v, 1)
    }

    /// Matrix of `x ↦ x - ω(x, v)·v`, the inverse of [`Self::transvection`].
    pub fn inverse_transvection(v: &[BigInt]) -> Result<Self, SymplecticError> {
        Self::transvection_power(v, -1)
    }

    /// Stabilization `A ⊕ B` in genus `g_a + g_b`.
    ///
    /// The coordinate order is `(a(A), a(B), b(A), b(B))`, so the result
    /// preserves `J_{g_a+g_b}`. A plain block-diagonal sum would not.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (ga, gb) = (self.genus, other.genus);
        let g = ga + gb;
        // position in the combined basis -> (which summand, index in that summand)
        let locate = |i: usize| -> (bool, usize) {
            if i < ga {
                (true, i)
            } else if i < g {
                (false, i - ga)
            } else if i < g + ga {
                (true, i - g + ga)
            } else {
                (false, i - g - ga + gb)
            }
        };
        let mat = IntMatrix::from_fn(2 * g, 2 * g, |i, j| {
            let ((si, li), (sj, lj)) = (locate(i), locate(j));
            match (si, sj) {
                (true, true) => self.mat.get(li, lj).clone(),
                (false, false) => other.mat.get(li, lj).clone(),
                _ => BigInt::zero(),
            }
        });
        Self { genus: g, mat }
    }

    pub fn trace(&self) -> BigInt {
        (0..2 * self.genus).fold(BigInt::zero(), |acc, i| acc + self.mat.get(i, i))
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.mat
            .entries()
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_default()
    }
}

impl Mul for &SymplecticElement {
    type Output = SymplecticElement;

    fn mul(self, rhs: Self) -> SymplecticElement {
        self.checked_mul(rhs).expect("genus mismatch in product")
    }
}

impl fmt::Debug for SymplecticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp(g={}){:?}", self.genus, self.mat)
    }
}

impl fmt::Display for SymplecticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}
