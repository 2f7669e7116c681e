use crate::scalar::ExactField;

use super::Matrix;

/// Reduced row echelon form together with the pivot column of each nonzero row.
#[derive(Clone)]
pub struct Echelon<T> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

pub fn rref<T: ExactField>(m: &Matrix<T>) -> Echelon<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<T>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = T::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon {
        reduced: Matrix::from_fn(rows, cols, |i, j| a[i][j].clone()),
        pivots,
    }
}

pub fn rank<T: ExactField>(m: &Matrix<T>) -> usize {
    rref(m).pivots.len()
}

/// Basis of `{v : Mv = 0}` read off the reduced row echelon form.
///
/// One vector per free column `f`, in increasing order of `f`: it has a 1 in
/// position `f`, zeros in the other free positions, and `-R[r][f]` in the
/// pivot position of row `r`. The output depends only on `M`.
pub fn kernel_basis<T: ExactField>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let Echelon { reduced, pivots } = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(r, f).clone();
            }
            v
        })
        .collect()
}

/// Inverse by Gauss-Jordan elimination; `None` when singular or not square.
pub fn inverse<T: ExactField>(m: &Matrix<T>) -> Option<Matrix<T>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(n)).ok()?;
    let Echelon { reduced, pivots } = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatMatrix, Rational};
    use num_rational::Rational64;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn zero_map_has_full_kernel() {
        let basis = kernel_basis(&RatMatrix::zeros(2, 2));
        assert_eq!(basis, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
    }

    #[test]
    fn unipotent_block_kernel() {
        // [(A^-1 - I) | (A^n - I)] for A = [[1,-1],[0,1]]
        for n in 1..=6 {
            let m = RatMatrix::from_rows([[q(0), q(1), q(0), q(-n)], [q(0), q(0), q(0), q(0)]]);
            let basis = kernel_basis(&m);
            assert_eq!(
                basis,
                vec![
                    vec![q(1), q(0), q(0), q(0)],
                    vec![q(0), q(0), q(1), q(0)],
                    vec![q(0), q(n), q(0), q(1)],
                ]
            );
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::<Rational64>::from_rows([
            [Rational64::new(1, 2), 2.into(), 3.into(), 4.into()],
            [2.into(), 4.into(), 6.into(), 8.into()],
            [1.into(), 0.into(), 1.into(), 0.into()],
        ]);
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), 4 - rank(&m));
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(|x| *x == 0.into()));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_rows([[q(2), q(1)], [q(7), q(4)]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(&m * &inv, RatMatrix::identity(2));
        assert!(inverse(&RatMatrix::from_rows([[q(1), q(2)], [q(2), q(4)]])).is_none());
    }
}
