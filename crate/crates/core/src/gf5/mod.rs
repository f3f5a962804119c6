//! Dense linear algebra over the field with five elements.
//!
//! Matrices store one byte per entry in row-major order. Products accumulate
//! in `u16` and reduce once per output row, which is exact for inner
//! dimensions far beyond the 111 used here.

mod matrix;
mod subspace;
mod text;

pub use matrix::{Gf5Matrix, Gf5Scalar};
pub use subspace::Subspace;
pub use text::{format_matrix, parse_matrix, read_matrix, write_matrix, MatrixFormatError};

use thiserror::Error;

/// Errors raised by the linear algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {op} of {lhs:?} and {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("element order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("argument is not nilpotent of index at most 5")]
    NotNilpotent5,
}

/// Multiplicative inverses in GF(5), indexed by value.
pub(crate) const INV: [u8; 5] = [0, 1, 3, 2, 4];
