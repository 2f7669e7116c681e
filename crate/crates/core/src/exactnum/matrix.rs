use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

use super::ExactError;

/// Dense row-major matrix over a scalar ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::EntryCount {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows. Panics on ragged input; intended for
    /// literals in code and tests.
    pub fn from_rows<R, E>(rows: R) -> Self
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = E>,
        E: Into<T>,
    {
        let rows: Vec<Vec<T>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn column(v: &[T]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Self, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Self, ExactError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(ExactError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b.clone())
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.zip_with(rhs, "sub", |a, b| a.clone() - b.clone())
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.rows != rhs.rows {
            return Err(ExactError::DimensionMismatch {
                op: "hstack",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Block-diagonal sum `self ⊕ rhs`.
    pub fn block_diag(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => rhs.get(i - self.rows, j - self.cols).clone(),
                _ => T::zero(),
            }
        })
    }

    /// Determinant by cofactor expansion along the first row. Only meant for
    /// the small matrices this crate handles (sanity checks up to 4x4 or so).
    pub fn det(&self) -> Result<T, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(det_cofactor(self))
    }
}

fn det_cofactor<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.rows();
    match n {
        0 => T::one(),
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0).clone() * m.get(1, 1).clone() - m.get(0, 1).clone() * m.get(1, 0).clone(),
        _ => {
            let mut acc = T::zero();
            for j in 0..n {
                if m.get(0, j).is_zero() {
                    continue;
                }
                let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                    m.get(r + 1, if c < j { c } else { c + 1 }).clone()
                });
                let term = m.get(0, j).clone() * det_cofactor(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: Self) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix sum dimension mismatch")
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: Self) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix difference dimension mismatch")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Writes the matrix in the text exchange format: a `rows cols` header
    /// followed by one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Matrix<i64>;

    #[test]
    fn product_and_transpose() {
        let a = M::from_rows([[1, 2], [3, 4]]);
        let b = M::from_rows([[0, 1], [1, 0]]);
        assert_eq!(&a * &b, M::from_rows([[2, 1], [4, 3]]));
        assert_eq!(a.transpose(), M::from_rows([[1, 3], [2, 4]]));
        assert!(a.checked_mul(&M::zeros(3, 1)).is_err());
    }

    #[test]
    fn det_small() {
        assert_eq!(M::identity(4).det().unwrap(), 1);
        let m = M::from_rows([[2, 0, 1], [1, 3, 2], [1, 1, 1]]);
        assert_eq!(m.det().unwrap(), 0);
        assert_eq!(M::from_rows([[2, 1], [1, 3]]).det().unwrap(), 5);
        assert!(M::zeros(2, 3).det().is_err());
    }

    #[test]
    fn block_diag_and_hstack() {
        let a = M::from_rows([[1]]);
        let b = M::from_rows([[2, 3], [4, 5]]);
        let d = a.block_diag(&b);
        assert_eq!(d, M::from_rows([[1, 0, 0], [0, 2, 3], [0, 4, 5]]));
        assert_eq!(b.hstack(&b).unwrap().cols(), 4);
        assert!(a.hstack(&b).is_err());
    }

    #[test]
    fn from_vec_rejects_bad_length() {
        assert!(M::from_vec(2, 2, vec![1, 2, 3]).is_err());
    }
}
