//! Exact rational linear algebra: scalars, dense matrices, fraction-free
//! determinants, adjugates, minors, rank and nullspace, plus dual numbers
//! for exact first derivatives of polynomial matrix functions.

mod det;
mod dual;
mod matrix;
mod reduce;
mod scalar;

pub use dual::{directional_derivative, partial_derivative, DualScalar};
pub(crate) use matrix::to_zero_based;
pub use matrix::{Matrix, RationalMatrix};
pub use reduce::{inverse, nullspace_basis, rank, rref};
pub use scalar::{cofactor_adjugate, format_rational, int, parse_rational, ratio, Rational, Scalar};

/// Free-function form of [`Matrix::minor`] for 1-based row and column lists.
pub fn minor<T: Scalar>(m: &Matrix<T>, rows: &[usize], cols: &[usize]) -> crate::error::Result<T> {
    m.minor(rows, cols)
}
