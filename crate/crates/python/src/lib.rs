//! Python bindings: shapes, generator descriptors, evaluation, sampling and
//! the verification suite. Matrices cross the boundary as nested lists of
//! ints or `"p/q"` strings; structured results come back as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

use parinv_core::generators::{describe as describe_shape, evaluate_json};
use parinv_core::linalg::RationalMatrix;
use parinv_core::sampling::{Sampler, Seed, ShapeSampler, SliceVariant, DEFAULT_BOUND};
use parinv_core::shapes::{dim_g0, dim_group, dim_unipotent_radical, index_set, make_shape, FlagShape, GroupKind};
use parinv_core::verification::{orbit_dimension as orbit_dim, run_suite, SuiteOptions};
use parinv_core::Error;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn read_matrix(py: Python<'_>, m: &Bound<'_, PyAny>) -> PyResult<RationalMatrix> {
    let text: String = py.import("json")?.call_method1("dumps", (m,))?.extract()?;
    RationalMatrix::from_json_str(&text).map_err(py_err)
}

/// A parabolic shape: group kind (`"gl"`, `"sl"`, `"o"`, `"sp"`), size and
/// block sizes.
#[pyclass(name = "Shape", frozen)]
struct PyShape {
    inner: FlagShape,
}

#[pymethods]
impl PyShape {
    #[new]
    fn new(kind: &str, n: usize, parts: Vec<usize>) -> PyResult<Self> {
        let kind: GroupKind = kind.parse().map_err(py_err)?;
        let inner = make_shape(kind, n, parts).map_err(py_err)?;
        Ok(PyShape { inner })
    }

    #[getter]
    fn kind(&self) -> String {
        self.inner.kind().to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    /// Generator index pairs in generator order.
    fn index_set(&self) -> Vec<(usize, usize)> {
        index_set(&self.inner).pairs().iter().map(|p| (p.i, p.j)).collect()
    }

    /// Pairs of the central block (O/SP with an odd number of blocks).
    fn gamma0(&self) -> Vec<(usize, usize)> {
        index_set(&self.inner).gamma0().iter().map(|p| (p.i, p.j)).collect()
    }

    fn dims<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let s = &self.inner;
        let v = serde_json::json!({
            "group": dim_group(s),
            "unipotent_radical": dim_unipotent_radical(s),
            "g0": dim_g0(s),
            "generators": index_set(s).len() + dim_g0(s),
        });
        to_py(py, &v)
    }

    fn __repr__(&self) -> String {
        format!("Shape({:?}, {}, {:?})", self.kind(), self.n(), self.parts())
    }
}

/// Generator descriptors as dicts, in the order printed by `parinv describe`.
#[pyfunction]
fn describe<'py>(py: Python<'py>, shape: &PyShape) -> PyResult<Bound<'py, PyAny>> {
    let lines = describe_shape(&shape.inner).map_err(py_err)?;
    to_py(py, &Value::Array(lines))
}

/// Values of every generator at `matrix`, keyed by `"(i,j)"`.
#[pyfunction]
fn evaluate<'py>(py: Python<'py>, shape: &PyShape, matrix: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let x = read_matrix(py, matrix)?;
    let n = shape.inner.n();
    if x.rows() != n || x.cols() != n {
        return Err(PyValueError::new_err(format!("matrix must be {n}x{n}")));
    }
    to_py(py, &evaluate_json(&shape.inner, &x).map_err(py_err)?)
}

/// Seeded sample as a list of rows of `"p/q"` strings. `kind` is one of
/// `group`, `radical`, `slice`, `slice0`, `slice-circ`.
#[pyfunction]
#[pyo3(signature = (shape, seed=0, bound=DEFAULT_BOUND, kind="group"))]
fn sample<'py>(py: Python<'py>, shape: &PyShape, seed: u64, bound: i64, kind: &str) -> PyResult<Bound<'py, PyAny>> {
    let sampler = ShapeSampler::new(&shape.inner);
    let mut rng = Sampler::new(Seed::new(seed, 0));
    let point = match kind {
        "group" => sampler.sample_group_point(&mut rng, bound, false),
        "radical" => sampler.sample_unipotent_radical(&mut rng, bound),
        "slice" => sampler.sample_slice(&mut rng, bound, SliceVariant::S).map(|p| p.point),
        "slice0" => sampler.sample_slice(&mut rng, bound, SliceVariant::S0).map(|p| p.point),
        "slice-circ" => sampler.sample_slice(&mut rng, bound, SliceVariant::SCirc).map(|p| p.point),
        other => return Err(PyValueError::new_err(format!("unknown sample kind {other:?}"))),
    }
    .map_err(py_err)?;
    to_py(py, &point.matrix().to_json())
}

#[pyfunction]
fn orbit_dimension(py: Python<'_>, shape: &PyShape, matrix: &Bound<'_, PyAny>) -> PyResult<usize> {
    let x = read_matrix(py, matrix)?;
    orbit_dim(&shape.inner, &x).map_err(py_err)
}

/// Runs the verification suite; returns the report dict (see `passed`).
#[pyfunction]
#[pyo3(signature = (shape, seed=0, trials=100, bound=DEFAULT_BOUND))]
fn verify<'py>(py: Python<'py>, shape: &PyShape, seed: u64, trials: u32, bound: i64) -> PyResult<Bound<'py, PyAny>> {
    let opts = SuiteOptions::new(seed, trials, bound);
    let inner = shape.inner.clone();
    let report = py.detach(move || run_suite(&inner, &opts)).map_err(py_err)?;
    let mut v = report.to_json();
    v["passed"] = Value::Bool(report.passed());
    to_py(py, &v)
}

#[pymodule]
pub fn parinv(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyShape>()?;
    m.add_function(wrap_pyfunction!(describe, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
