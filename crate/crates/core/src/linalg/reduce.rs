use num_traits::{One, Zero};

use super::matrix::{Matrix, RationalMatrix};
use super::scalar::Rational;
use crate::error::Result;

/// Reduced row echelon form over the rationals, with the pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a.get(p, j).clone();
                a.set(p, j, a.get(r, j).clone());
                a.set(r, j, tmp);
            }
        }
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let v = a.get(i, j) - &factor * a.get(r, j);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : m v = 0}`, one vector per free column; `cols - rank` vectors.
pub fn nullspace_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let (red, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    (0..cols)
        .filter(|&f| is_pivot[f].is_none())
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -red.get(row, free).clone();
            }
            v
        })
        .collect()
}

/// Exact inverse, or `None` when singular.
pub fn inverse(m: &RationalMatrix) -> Result<Option<RationalMatrix>> {
    m.require_square("inverse")?;
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.get(r, c).clone()
        } else if c - n == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Ok(None);
    }
    Ok(Some(red.block(0, n, n, n)))
}
