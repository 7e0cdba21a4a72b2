//! Independent reference computations used only by tests.

use num_traits::{One, Zero};

use crate::generators::{GeneratorDescriptor, Recipe};
use crate::linalg::{DualScalar, Matrix, Rational, RationalMatrix};

/// Laplace expansion along the first row, over any ring given by closures.
fn laplace<T: Clone>(
    m: &[Vec<T>],
    zero: &T,
    one: &T,
    add: &impl Fn(&T, &T) -> T,
    mul: &impl Fn(&T, &T) -> T,
    neg: &impl Fn(&T) -> T,
) -> T {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    let mut acc = zero.clone();
    for c in 0..n {
        let sub: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = mul(&m[0][c], &laplace(&sub, zero, one, add, mul, neg));
        acc = if c % 2 == 0 { add(&acc, &term) } else { add(&acc, &neg(&term)) };
    }
    acc
}

fn rows_of<T: Clone>(m: &Matrix<T>) -> Vec<Vec<T>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

pub fn cofactor_det_oracle(m: &RationalMatrix) -> Rational {
    laplace(
        &rows_of(m),
        &Rational::zero(),
        &Rational::one(),
        &|a, b| a + b,
        &|a, b| a * b,
        &|a| -a,
    )
}

fn dual_det(m: &[Vec<(Rational, Rational)>]) -> (Rational, Rational) {
    laplace(
        m,
        &(Rational::zero(), Rational::zero()),
        &(Rational::one(), Rational::zero()),
        &|a, b| (&a.0 + &b.0, &a.1 + &b.1),
        &|a, b| (&a.0 * &b.0, &a.0 * &b.1 + &a.1 * &b.0),
        &|a| (-&a.0, -&a.1),
    )
}

pub fn cofactor_adjugate_oracle(m: &RationalMatrix) -> RationalMatrix {
    let n = m.rows();
    RationalMatrix::from_fn(n, n, |r, c| {
        let keep_r: Vec<usize> = (0..n).filter(|&i| i != c).collect();
        let keep_c: Vec<usize> = (0..n).filter(|&j| j != r).collect();
        let d = cofactor_det_oracle(&m.select(&keep_r, &keep_c));
        if (r + c) % 2 == 0 { d } else { -d }
    })
}

/// Evaluates a GL recipe with Laplace expansion only.
pub fn eval_descriptor_oracle(d: &GeneratorDescriptor, x: &RationalMatrix) -> Rational {
    match &d.recipe {
        Recipe::Minor(m) => {
            let r: Vec<usize> = m.rows.iter().map(|i| i - 1).collect();
            let c: Vec<usize> = m.cols.iter().map(|j| j - 1).collect();
            cofactor_det_oracle(&x.select(&r, &c))
        }
        Recipe::Stacked { x_rows, adj_rows, cols } => {
            let adj = cofactor_adjugate_oracle(x);
            let c: Vec<usize> = cols.iter().map(|j| j - 1).collect();
            let top = x.select(&x_rows.iter().map(|i| i - 1).collect::<Vec<_>>(), &c);
            let bottom = adj.select(&adj_rows.iter().map(|i| i - 1).collect::<Vec<_>>(), &c);
            cofactor_det_oracle(&top.vstack(&bottom).unwrap())
        }
        Recipe::Ratio { numerator, denominator } => {
            let eval = |m: &crate::generators::MinorSpec| {
                let r: Vec<usize> = m.rows.iter().map(|i| i - 1).collect();
                let c: Vec<usize> = m.cols.iter().map(|j| j - 1).collect();
                cofactor_det_oracle(&x.select(&r, &c))
            };
            eval(numerator) / eval(denominator)
        }
    }
}

/// `∂/∂x_ij` of a GL recipe, via Laplace expansion over pairs `(value, derivative)`.
pub fn dual_partial_oracle(d: &GeneratorDescriptor, x: &RationalMatrix, i: usize, j: usize) -> Rational {
    let n = x.rows();
    let seeded: Vec<Vec<(Rational, Rational)>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let e = if (r, c) == (i - 1, j - 1) { Rational::one() } else { Rational::zero() };
                    (x.get(r, c).clone(), e)
                })
                .collect()
        })
        .collect();
    let select = |m: &[Vec<(Rational, Rational)>], rows: &[usize], cols: &[usize]| -> Vec<Vec<(Rational, Rational)>> {
        rows.iter().map(|&r| cols.iter().map(|&c| m[r - 1][c - 1].clone()).collect()).collect()
    };
    match &d.recipe {
        Recipe::Minor(m) => dual_det(&select(&seeded, &m.rows, &m.cols)).1,
        Recipe::Stacked { x_rows, adj_rows, cols } => {
            let all: Vec<usize> = (1..=n).collect();
            let adj: Vec<Vec<(Rational, Rational)>> = (1..=n)
                .map(|r| {
                    (1..=n)
                        .map(|c| {
                            let rr: Vec<usize> = all.iter().copied().filter(|&k| k != c).collect();
                            let cc: Vec<usize> = all.iter().copied().filter(|&k| k != r).collect();
                            let v = dual_det(&select(&seeded, &rr, &cc));
                            if (r + c) % 2 == 0 { v } else { (-v.0, -v.1) }
                        })
                        .collect()
                })
                .collect();
            let mut stacked = select(&seeded, x_rows, cols);
            stacked.extend(select(&adj, adj_rows, cols));
            dual_det(&stacked).1
        }
        Recipe::Ratio { .. } => unimplemented!("ratio recipes are checked through their minors"),
    }
}

#[allow(dead_code)]
pub fn dual_matrix(x: &RationalMatrix, d: &RationalMatrix) -> Matrix<DualScalar> {
    Matrix::from_fn(x.rows(), x.cols(), |r, c| DualScalar::new(x.get(r, c).clone(), d.get(r, c).clone()))
}
