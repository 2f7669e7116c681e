//! Exact linear algebra: dense matrices, kernels, and signatures of symmetric
//! bilinear forms by congruence diagonalization.

mod form;
mod linalg;
mod matrix;
pub mod text;

pub use form::{gram_restrict, SymmetricForm};
pub use linalg::{inverse, kernel_basis, rank, rref, Echelon};
pub use matrix::Matrix;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("expected {expected} matrix entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("Gram matrix is not symmetric")]
    AsymmetricGram,
    #[error("parse error: {0}")]
    Parse(String),
}
