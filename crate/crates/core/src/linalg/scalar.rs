use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Commutative ring elements that generator recipes can be evaluated over.
///
/// Implementors supply their own determinant so that each ring can use the
/// algorithm that suits it; the adjugate defaults to the signed-cofactor
/// construction on top of it.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(q: Rational) -> Self;

    /// Quotient, or `None` when the divisor is not invertible.
    fn try_div(&self, other: &Self) -> Option<Self>;

    /// Determinant of a square matrix. Callers check squareness.
    fn determinant(m: &Matrix<Self>) -> Self;

    fn adjugate_of(m: &Matrix<Self>) -> Matrix<Self> {
        cofactor_adjugate(m)
    }
}

/// Transpose of the matrix of signed cofactors. Defined for singular input too.
pub fn cofactor_adjugate<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let n = m.rows();
    if n == 1 {
        return Matrix::identity(1);
    }
    let all: Vec<usize> = (0..n).collect();
    Matrix::from_fn(n, n, |r, c| {
        // entry (r, c) of the adjugate is the (c, r) cofactor
        let rows: Vec<usize> = all.iter().copied().filter(|&i| i != c).collect();
        let cols: Vec<usize> = all.iter().copied().filter(|&j| j != r).collect();
        let d = T::determinant(&m.select(&rows, &cols));
        if (r + c) % 2 == 0 {
            d
        } else {
            -d
        }
    })
}

impl Scalar for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }

    fn determinant(m: &Matrix<Self>) -> Self {
        super::det::bareiss_determinant(m)
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"n"` or `"p/q"`. The result is normalised; a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    match t.split_once('/') {
        None => BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|e| Error::Parse(format!("{t:?}: {e}"))),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            let q = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("{t:?}: zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `"p/q"` in lowest terms, or just `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}
