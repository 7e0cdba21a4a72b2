use num_traits::One;

use super::{EvalPoint, GeneratorDescriptor, Recipe};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, RationalMatrix, Scalar};
use crate::shapes::{index_set, FlagShape, GroupKind, IndexPair};

/// Recipe for `J_ij` in size `n`.
///
/// On or above the anti-diagonal: minor with rows `[i, j'+1, ..., n]` and
/// columns `[1, j]`. Below it: the last `i'` rows of `X` over the last `j - i'`
/// rows of `X*`, columns `[1, j]`.
pub(crate) fn descriptor_for(n: usize, pair: IndexPair) -> GeneratorDescriptor {
    let IndexPair { i, j } = pair;
    let cols: Vec<usize> = (1..=j).collect();
    if i + j <= n + 1 {
        let j_mirror = n + 1 - j;
        let mut rows = vec![i];
        rows.extend(j_mirror + 1..=n);
        GeneratorDescriptor::minor(pair, rows, cols)
    } else {
        let i_mirror = n + 1 - i;
        let adj_count = j - i_mirror;
        GeneratorDescriptor {
            pair,
            recipe: Recipe::Stacked {
                x_rows: (n - i_mirror + 1..=n).collect(),
                adj_rows: (n - adj_count + 1..=n).collect(),
                cols,
            },
        }
    }
}

/// Generators `J_ij` in generator order; SL omits `(1, n)`.
pub fn build_generators(shape: &FlagShape) -> Result<Vec<GeneratorDescriptor>> {
    if !matches!(shape.kind(), GroupKind::Gl | GroupKind::Sl) {
        return Err(Error::WrongKind {
            expected: "gl|sl".into(),
            actual: shape.kind().to_string(),
        });
    }
    Ok(index_set(shape)
        .pairs()
        .iter()
        .map(|&p| descriptor_for(shape.n(), p))
        .collect())
}

pub fn eval_all<T: Scalar>(shape: &FlagShape, point: &Matrix<T>) -> Result<Vec<T>> {
    if point.rows() != shape.n() || point.cols() != shape.n() {
        return Err(Error::Dimension(format!(
            "point is {}x{}, shape needs {n}x{n}",
            point.rows(),
            point.cols(),
            n = shape.n()
        )));
    }
    let ctx = EvalPoint::new(point)?;
    build_generators(shape)?.iter().map(|d| d.eval(&ctx)).collect()
}

/// 0/1 matrix with ones on the anti-diagonal and at `(i+k, j-k)`,
/// `0 <= k <= n-i`; `J_ij` does not vanish there for pairs below the anti-diagonal.
pub fn nonvanishing_witness(n: usize, pair: IndexPair) -> RationalMatrix {
    let mut a = RationalMatrix::anti_identity(n);
    for k in 0..=n - pair.i {
        if pair.j > k {
            a.set(pair.i + k - 1, pair.j - k - 1, Rational::one());
        }
    }
    a
}

/// Value of `J_ij`, `(i, j)` on or above the anti-diagonal, at a point
/// supported on that region: `±s_{n1} s_{n-1,2} ... s_{j'+1,j-1} s_{ij}`.
///
/// The surviving term of the minor is the reversal permutation of size `j`,
/// whose sign is `(-1)^{j(j-1)/2}`.
pub fn signed_monomial(point: &RationalMatrix, pair: IndexPair) -> Rational {
    let n = point.rows();
    let IndexPair { i, j } = pair;
    let mut value = point.get(i - 1, j - 1).clone();
    for t in 1..j {
        value *= point.get(n - t, t - 1);
    }
    if (j * (j - 1) / 2) % 2 == 1 {
        -value
    } else {
        value
    }
}
