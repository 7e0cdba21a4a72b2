//! Combinatorial generator recipes and their evaluation.
//!
//! A recipe names rows and columns (1-based, in the exact order used in the
//! determinant) of the point `X` and of its adjugate `X*`. Evaluation never
//! expands polynomials.

mod gl;
mod osp;

use std::cell::OnceCell;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{to_zero_based, Matrix, Scalar};
use crate::linalg::{format_rational, RationalMatrix};
use crate::sampling::GroupPoint;
use crate::shapes::{FlagShape, IndexPair};

pub use gl::{build_generators, eval_all, nonvanishing_witness, signed_monomial};
pub use osp::{build_osp_system, eval_osp, OspGeneratorSystem, OspValues};


/// Minor of `X` with the listed rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        MinorSpec { rows, cols }
    }

    pub fn eval<T: Scalar>(&self, point: &EvalPoint<'_, T>) -> Result<T> {
        point.matrix().minor(&self.rows, &self.cols)
    }

    fn to_json(&self) -> Value {
        json!({ "x_rows": self.rows, "adj_rows": [], "cols": self.cols })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Recipe {
    Minor(MinorSpec),
    /// Determinant of the listed rows of `X` stacked over the listed rows of `X*`.
    Stacked {
        x_rows: Vec<usize>,
        adj_rows: Vec<usize>,
        cols: Vec<usize>,
    },
    Ratio {
        numerator: MinorSpec,
        denominator: MinorSpec,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorDescriptor {
    pub pair: IndexPair,
    pub recipe: Recipe,
}

/// A point plus its adjugate, computed at most once.
pub struct EvalPoint<'a, T: Scalar> {
    matrix: &'a Matrix<T>,
    adjugate: OnceCell<Matrix<T>>,
}

impl<'a, T: Scalar> EvalPoint<'a, T> {
    pub fn new(matrix: &'a Matrix<T>) -> Result<Self> {
        matrix.require_square("generator evaluation")?;
        Ok(EvalPoint {
            matrix,
            adjugate: OnceCell::new(),
        })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        self.matrix
    }

    pub fn adjugate(&self) -> &Matrix<T> {
        self.adjugate.get_or_init(|| T::adjugate_of(self.matrix))
    }
}

impl GeneratorDescriptor {
    pub fn minor(pair: IndexPair, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        GeneratorDescriptor {
            pair,
            recipe: Recipe::Minor(MinorSpec::new(rows, cols)),
        }
    }

    pub fn eval<T: Scalar>(&self, point: &EvalPoint<'_, T>) -> Result<T> {
        match &self.recipe {
            Recipe::Minor(m) => m.eval(point),
            Recipe::Stacked { x_rows, adj_rows, cols } => {
                if x_rows.len() + adj_rows.len() != cols.len() {
                    return Err(Error::Dimension(format!(
                        "stacked recipe with {} + {} rows and {} columns",
                        x_rows.len(),
                        adj_rows.len(),
                        cols.len()
                    )));
                }
                let x = point.matrix();
                let xr = to_zero_based(x_rows, x.rows())?;
                let c = to_zero_based(cols, x.cols())?;
                let adj = point.adjugate();
                let ar = to_zero_based(adj_rows, adj.rows())?;
                let stacked = x.select(&xr, &c).vstack(&adj.select(&ar, &c))?;
                Ok(T::determinant(&stacked))
            }
            Recipe::Ratio { numerator, denominator } => {
                let den = denominator.eval(point)?;
                let num = numerator.eval(point)?;
                num.try_div(&den).ok_or(Error::RatioUndefined)
            }
        }
    }

    /// Evaluates at a bare matrix.
    pub fn eval_at<T: Scalar>(&self, point: &Matrix<T>) -> Result<T> {
        self.eval(&EvalPoint::new(point)?)
    }

    /// Descriptor JSON; one object per line in `parinv describe`.
    pub fn to_json(&self) -> Value {
        let pair = [self.pair.i, self.pair.j];
        match &self.recipe {
            Recipe::Minor(m) => json!({
                "pair": pair, "kind": "minor",
                "x_rows": m.rows, "adj_rows": [], "cols": m.cols,
            }),
            Recipe::Stacked { x_rows, adj_rows, cols } => json!({
                "pair": pair, "kind": "stacked",
                "x_rows": x_rows, "adj_rows": adj_rows, "cols": cols,
            }),
            Recipe::Ratio { numerator, denominator } => json!({
                "pair": pair, "kind": "ratio",
                "numerator": numerator.to_json(),
                "denominator": denominator.to_json(),
            }),
        }
    }
}

/// Descriptor lines for a shape: `J` for GL/SL; `J°`, `M0`, ratios for O/SP.
pub fn describe(shape: &FlagShape) -> Result<Vec<Value>> {
    if shape.kind().is_classical_form() {
        Ok(build_osp_system(shape)?.describe())
    } else {
        Ok(build_generators(shape)?.iter().map(GeneratorDescriptor::to_json).collect())
    }
}

fn value_map<'a>(descs: &'a [GeneratorDescriptor], vals: impl IntoIterator<Item = &'a crate::linalg::Rational>) -> Value {
    Value::Object(
        descs
            .iter()
            .zip(vals)
            .map(|(d, v)| (d.pair.to_string(), json!(format_rational(v))))
            .collect(),
    )
}

/// Every generator at `x`, keyed by `"(i,j)"`. For O/SP the point must
/// preserve the form; ratios are reported as undefined when `M0(x) = 0`.
pub fn evaluate_json(shape: &FlagShape, x: &RationalMatrix) -> Result<Value> {
    if !shape.kind().is_classical_form() {
        let gens = build_generators(shape)?;
        let vals = eval_all(shape, x)?;
        return Ok(value_map(&gens, &vals));
    }
    let point = GroupPoint::new(shape, x.clone())?;
    let sys = build_osp_system(shape)?;
    let vals = eval_osp(&sys, &point)?;
    let ratios = match &vals.p_values {
        Ok(p) => value_map(&sys.ratios, p),
        Err(e) => json!({ "undefined": e.to_string() }),
    };
    Ok(json!({
        "j_circ": value_map(&sys.j_circ, &vals.j_values),
        "m0": vals.m0.as_ref().map(format_rational),
        "ratios": ratios,
    }))
}
