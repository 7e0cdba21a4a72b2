use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::matrix::{Matrix, RationalMatrix};
use super::scalar::{cofactor_adjugate, Rational, Scalar};
use crate::error::Result;

/// `value + derivative·ε` with `ε² = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualScalar {
    pub value: Rational,
    pub derivative: Rational,
}

impl DualScalar {
    pub fn new(value: Rational, derivative: Rational) -> Self {
        DualScalar { value, derivative }
    }

    pub fn constant(value: Rational) -> Self {
        DualScalar {
            value,
            derivative: Rational::zero(),
        }
    }

    /// Quotient, defined when the divisor has a nonzero value part.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.value.is_zero() {
            return None;
        }
        let c2 = &other.value * &other.value;
        Some(DualScalar {
            value: &self.value / &other.value,
            derivative: (&self.derivative * &other.value - &self.value * &other.derivative) / c2,
        })
    }
}

impl Add for DualScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        DualScalar::new(self.value + o.value, self.derivative + o.derivative)
    }
}

impl Sub for DualScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        DualScalar::new(self.value - o.value, self.derivative - o.derivative)
    }
}

impl Mul for DualScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let derivative = &self.value * &o.derivative + &self.derivative * &o.value;
        DualScalar::new(self.value * o.value, derivative)
    }
}

impl Neg for DualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        DualScalar::new(-self.value, -self.derivative)
    }
}

fn split(m: &Matrix<DualScalar>) -> (RationalMatrix, RationalMatrix) {
    (m.map(|d| d.value.clone()), m.map(|d| d.derivative.clone()))
}

/// `tr(adj(v) · d)`, the directional derivative of the determinant.
fn jacobi(adj: &RationalMatrix, d: &RationalMatrix) -> Rational {
    let n = adj.rows();
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (adj.get(i, j), d.get(j, i));
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
    }
    acc
}

impl Zero for DualScalar {
    fn zero() -> Self {
        DualScalar::constant(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.derivative.is_zero()
    }
}

impl One for DualScalar {
    fn one() -> Self {
        DualScalar::constant(Rational::one())
    }
}

impl Scalar for DualScalar {
    fn from_rational(q: Rational) -> Self {
        DualScalar::constant(q)
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }

    fn determinant(m: &Matrix<Self>) -> Self {
        let (v, d) = split(m);
        if v.rows() == 0 {
            return Self::one();
        }
        let adj = Rational::adjugate_of(&v);
        DualScalar::new(Rational::determinant(&v), jacobi(&adj, &d))
    }

    fn adjugate_of(m: &Matrix<Self>) -> Matrix<Self> {
        let (v, d) = split(m);
        let det = Rational::determinant(&v);
        if det.is_zero() || v.rows() < 2 {
            return cofactor_adjugate(m);
        }
        // d adj = (tr(adj·D)·adj − adj·D·adj) / det
        let adj = Rational::adjugate_of(&v);
        let t = jacobi(&adj, &d);
        let adj_d_adj = adj.mul(&d).and_then(|x| x.mul(&adj)).expect("square");
        Matrix::from_fn(v.rows(), v.cols(), |r, c| {
            let dv = (&t * adj.get(r, c) - adj_d_adj.get(r, c)) / &det;
            DualScalar::new(adj.get(r, c).clone(), dv)
        })
    }
}

/// Derivative of `f` at `point` in the direction `direction`.
pub fn directional_derivative<F>(f: F, point: &RationalMatrix, direction: &RationalMatrix) -> Result<Rational>
where
    F: Fn(&Matrix<DualScalar>) -> Result<DualScalar>,
{
    let seeded = Matrix::from_fn(point.rows(), point.cols(), |r, c| {
        DualScalar::new(point.get(r, c).clone(), direction.get(r, c).clone())
    });
    if direction.rows() != point.rows() || direction.cols() != point.cols() {
        return Err(crate::error::Error::Dimension("direction shape differs from point".into()));
    }
    Ok(f(&seeded)?.derivative)
}

/// `∂f/∂x_ij` at `point`, with `(i, j)` 1-based.
pub fn partial_derivative<F>(f: F, point: &RationalMatrix, i: usize, j: usize) -> Result<Rational>
where
    F: Fn(&Matrix<DualScalar>) -> Result<DualScalar>,
{
    let (r, c) = (
        super::matrix::to_zero_based(&[i], point.rows())?[0],
        super::matrix::to_zero_based(&[j], point.cols())?[0],
    );
    let mut direction = RationalMatrix::zeros(point.rows(), point.cols());
    direction.set(r, c, Rational::one());
    directional_derivative(f, point, &direction)
}
