use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::Rational;

/// Fraction-free (Bareiss) elimination with full pivoting.
///
/// Each row is first scaled by the lcm of its denominators so elimination runs
/// over the integers; every division in the main loop is exact.
pub(crate) fn bareiss_determinant(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    debug_assert!(m.is_square());
    if n == 0 {
        return Rational::one();
    }

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &l;
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        // smallest nonzero magnitude keeps intermediate growth down
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..n {
            for c in k..n {
                if a[r][c].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pr, pc)) if a[pr][pc].abs() <= a[r][c].abs() => {}
                    _ => pivot = Some((r, c)),
                }
            }
        }
        let Some((pr, pc)) = pivot else {
            return Rational::zero();
        };
        if pr != k {
            a.swap(pr, k);
            negate = !negate;
        }
        if pc != k {
            for row in a.iter_mut() {
                row.swap(pc, k);
            }
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}
