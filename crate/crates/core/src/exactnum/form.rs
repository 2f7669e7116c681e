use crate::scalar::ExactField;

use super::{ExactError, Matrix};

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Clone, PartialEq)]
pub struct SymmetricForm<T> {
    gram: Matrix<T>,
}

impl<T: crate::scalar::Scalar> std::fmt::Debug for SymmetricForm<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SymmetricForm{:?}", self.gram)
    }
}

impl<T: ExactField> SymmetricForm<T> {
    pub fn new(gram: Matrix<T>) -> Result<Self, ExactError> {
        if !gram.is_square() {
            return Err(ExactError::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(ExactError::AsymmetricGram);
        }
        Ok(Self { gram })
    }

    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn signature(&self) -> i64 {
        let (pos, neg) = self.inertia();
        pos as i64 - neg as i64
    }

    /// Number of positive and negative squares after diagonalizing by
    /// congruence.
    ///
    /// At step `k` the trailing block `k..n` is brought to a nonzero pivot at
    /// `(k, k)`: first by a symmetric swap with a later nonzero diagonal entry,
    /// otherwise through a hyperbolic pair `(p, q)` with `G[p][q] != 0`, where
    /// `b_p <- b_p + b_q`, `b_q <- b_p - b_q` turns the diagonal into
    /// `(2G[p][q], -2G[p][q])`. The pivot then clears its row and column.
    /// A trailing block that is identically zero only carries null directions.
    #[allow(clippy::needless_range_loop)]
    pub fn inertia(&self) -> (usize, usize) {
        let n = self.dim();
        let mut g: Vec<Vec<T>> = (0..n).map(|i| self.gram.row(i).to_vec()).collect();
        let (mut pos, mut neg) = (0, 0);
        for k in 0..n {
            if g[k][k].is_zero() {
                if let Some(d) = (k + 1..n).find(|&d| !g[d][d].is_zero()) {
                    swap_sym(&mut g, k, d);
                } else if let Some((p, q)) = first_offdiag(&g, k) {
                    hyperbolic_split(&mut g, p, q);
                    swap_sym(&mut g, k, p);
                } else {
                    break;
                }
            }
            let pivot = g[k][k].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for r in k + 1..n {
                if g[r][k].is_zero() {
                    continue;
                }
                let f = g[r][k].clone() / pivot.clone();
                // row_r -= f row_k, then col_r -= f col_k
                for c in k..n {
                    let v = g[r][c].clone() - f.clone() * g[k][c].clone();
                    g[r][c] = v;
                }
                for c in k..n {
                    let v = g[c][r].clone() - f.clone() * g[c][k].clone();
                    g[c][r] = v;
                }
            }
        }
        (pos, neg)
    }

    /// `self ⊕ other`
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self {
            gram: self.gram.block_diag(&other.gram),
        }
    }

    pub fn negate(&self) -> Self {
        Self { gram: -&self.gram }
    }

    /// Gram matrix of the form in a new basis: `ᵗP G P`.
    pub fn congruent(&self, p: &Matrix<T>) -> Result<Self, ExactError> {
        let g = p.transpose().checked_mul(&self.gram)?.checked_mul(p)?;
        Self::new(g)
    }
}

fn swap_sym<T: Clone>(g: &mut [Vec<T>], a: usize, b: usize) {
    if a == b {
        return;
    }
    g.swap(a, b);
    for row in g.iter_mut() {
        row.swap(a, b);
    }
}

fn first_offdiag<T: ExactField>(g: &[Vec<T>], from: usize) -> Option<(usize, usize)> {
    let n = g.len();
    (from..n).find_map(|p| (p + 1..n).find(|&q| !g[p][q].is_zero()).map(|q| (p, q)))
}

/// Basis change `b_p <- b_p + b_q`, `b_q <- b_p - b_q` on a block whose
/// diagonal entries at `p` and `q` vanish.
fn hyperbolic_split<T: ExactField>(g: &mut [Vec<T>], p: usize, q: usize) {
    let n = g.len();
    let old_p: Vec<T> = g[p].clone();
    let old_q: Vec<T> = g[q].clone();
    for c in 0..n {
        g[p][c] = old_p[c].clone() + old_q[c].clone();
        g[q][c] = old_p[c].clone() - old_q[c].clone();
    }
    for row in g.iter_mut() {
        let (a, b) = (row[p].clone(), row[q].clone());
        row[p] = a.clone() + b.clone();
        row[q] = a - b;
    }
}

/// Gram matrix of the bilinear map `(u, v) ↦ ᵗu B v` on the span of `basis`.
///
/// The result must be symmetric; an asymmetric Gram matrix means the basis
/// does not lie in a subspace where `B` restricts to a symmetric form.
pub fn gram_restrict<T: ExactField>(
    bilinear: &Matrix<T>,
    basis: &[Vec<T>],
) -> Result<SymmetricForm<T>, ExactError> {
    if !bilinear.is_square() {
        return Err(ExactError::NotSquare {
            rows: bilinear.rows(),
            cols: bilinear.cols(),
        });
    }
    let n = bilinear.rows();
    if let Some(bad) = basis.iter().find(|v| v.len() != n) {
        return Err(ExactError::VectorLength {
            expected: n,
            found: bad.len(),
        });
    }
    let images: Vec<Vec<T>> = basis.iter().map(|v| bilinear.mul_vec(v)).collect();
    let k = basis.len();
    let gram = Matrix::from_fn(k, k, |i, j| {
        basis[i]
            .iter()
            .zip(&images[j])
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    });
    SymmetricForm::new(gram)
}
