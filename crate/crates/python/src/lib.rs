//! Python bindings. Patterns are `(s, t)` tuples; vertex labels are 1-based as in the core crate.

use std::collections::BTreeMap;

use gallai_ramsey::bounds::{self, BoundValue, FormulaId};
use gallai_ramsey::search::{self, DEFAULT_BUDGET};
use gallai_ramsey::{construct, detect, euclid, BicliqueCertificate, BicliquePattern, BipartiteColoring, Color, Error};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn pattern((s, t): (usize, usize)) -> PyResult<BicliquePattern> {
    BicliquePattern::new(s, t).map_err(to_py)
}

/// Edge coloring of `K_{n1,n2}` with colors `1..=r`.
#[pyclass(name = "Coloring", module = "gallai_py", frozen, eq)]
#[derive(PartialEq)]
struct PyColoring(BipartiteColoring);

#[pymethods]
impl PyColoring {
    #[new]
    fn new(rows: Vec<Vec<Color>>, r: u32) -> PyResult<Self> {
        let n1 = rows.len();
        let n2 = rows.first().map_or(0, Vec::len);
        BipartiteColoring::new(n1, n2, r, &rows).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        gallai_ramsey::coloring::read_coloring(text).map(Self).map_err(to_py)
    }

    #[getter]
    fn n1(&self) -> usize {
        self.0.n1()
    }

    #[getter]
    fn n2(&self) -> usize {
        self.0.n2()
    }

    #[getter]
    fn r(&self) -> u32 {
        self.0.r()
    }

    /// Color of edge `u_i v_j`, 1-based.
    fn color(&self, i: usize, j: usize) -> PyResult<Color> {
        if i == 0 || j == 0 || i > self.0.n1() || j > self.0.n2() {
            return Err(PyValueError::new_err(format!("edge ({i}, {j}) out of range")));
        }
        Ok(self.0.color(i - 1, j - 1))
    }

    fn rows(&self) -> Vec<Vec<Color>> {
        self.0.to_rows()
    }

    fn histogram(&self) -> Vec<usize> {
        self.0.histogram()
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn source_hash(&self) -> String {
        self.0.source_hash()
    }

    fn __repr__(&self) -> String {
        format!("Coloring(n1={}, n2={}, r={})", self.0.n1(), self.0.n2(), self.0.r())
    }
}

/// Monochromatic or rainbow biclique witness.
#[pyclass(name = "Certificate", module = "gallai_py", frozen, eq)]
#[derive(PartialEq)]
struct PyCertificate(BicliqueCertificate);

#[pymethods]
impl PyCertificate {
    /// `"mono"` or `"rainbow"`.
    #[getter]
    fn kind(&self) -> String {
        self.0.kind.to_string()
    }

    #[getter]
    fn rows(&self) -> Vec<usize> {
        self.0.rows.clone()
    }

    #[getter]
    fn cols(&self) -> Vec<usize> {
        self.0.cols.clone()
    }

    #[getter]
    fn colors(&self) -> Vec<Vec<Color>> {
        self.0.colors.clone()
    }

    /// JSON document citing `coloring` by hash.
    fn to_json(&self, coloring: &PyColoring) -> String {
        self.0.to_document(&coloring.0).to_json()
    }

    fn __repr__(&self) -> String {
        format!("Certificate({})", self.0)
    }
}

fn wrap(cert: Option<BicliqueCertificate>) -> Option<PyCertificate> {
    cert.map(PyCertificate)
}

#[pyfunction]
fn find_mono(c: &PyColoring, p: (usize, usize)) -> PyResult<Option<PyCertificate>> {
    Ok(wrap(detect::find_mono_biclique(&c.0, pattern(p)?)))
}

#[pyfunction]
fn find_rainbow(c: &PyColoring, p: (usize, usize)) -> PyResult<Option<PyCertificate>> {
    Ok(wrap(detect::find_rainbow_biclique(&c.0, pattern(p)?)))
}

#[pyfunction]
fn find_any(c: &PyColoring, rainbow: (usize, usize), mono: (usize, usize)) -> PyResult<Option<PyCertificate>> {
    Ok(wrap(detect::find_any(&c.0, pattern(rainbow)?, pattern(mono)?)))
}

#[pyfunction]
fn verify_certificate(c: &PyColoring, cert: &PyCertificate) -> bool {
    detect::verify_certificate(&c.0, &cert.0)
}

#[pyfunction]
fn sample_rainbow(c: &PyColoring, p: (usize, usize), d: usize, trials: usize, seed: u64) -> PyResult<Option<PyCertificate>> {
    detect::sample_rainbow(&c.0, pattern(p)?, d, trials, seed).map(wrap).map_err(to_py)
}

#[pyfunction]
fn block_coloring(t: usize, r: u32) -> PyResult<PyColoring> {
    construct::block_coloring(t, r).map(PyColoring).map_err(to_py)
}

#[pyfunction]
fn random_coloring(n1: usize, n2: usize, r: u32, seed: u64) -> PyResult<PyColoring> {
    construct::random_coloring(n1, n2, r, seed).map(PyColoring).map_err(to_py)
}

#[pyfunction]
fn star_avoiding_coloring(p: usize, q: usize) -> PyResult<PyColoring> {
    construct::star_avoiding_coloring(p, q).map(PyColoring).map_err(to_py)
}

/// Returns `(outcome, witness, nodes_expanded)` with outcome `"found"` or `"exhausted"`.
#[pyfunction]
#[pyo3(signature = (n1, n2, r, rainbow, mono, budget = DEFAULT_BUDGET))]
fn exists_avoiding(
    py: Python<'_>,
    n1: usize,
    n2: usize,
    r: u32,
    rainbow: (usize, usize),
    mono: (usize, usize),
    budget: u64,
) -> PyResult<(String, Option<PyColoring>, u64)> {
    let (pr, pm) = (pattern(rainbow)?, pattern(mono)?);
    let res = py
        .detach(|| search::exists_avoiding_with_budget(n1, n2, r, pr, pm, budget))
        .map_err(to_py)?;
    Ok((res.outcome.to_string(), res.witness.map(PyColoring), res.nodes_expanded))
}

#[pyfunction]
#[pyo3(signature = (n1, r, rainbow, mono, n2_max, budget = DEFAULT_BUDGET))]
fn min_forcing_n2(
    py: Python<'_>,
    n1: usize,
    r: u32,
    rainbow: (usize, usize),
    mono: (usize, usize),
    n2_max: usize,
    budget: u64,
) -> PyResult<Option<usize>> {
    let (pr, pm) = (pattern(rainbow)?, pattern(mono)?);
    py.detach(|| search::min_forcing_n2(n1, r, pr, pm, n2_max, budget)).map_err(to_py)
}

#[pyfunction]
fn zarankiewicz_exact(py: Python<'_>, m: usize, n: usize, s: usize, t: usize) -> PyResult<u64> {
    py.detach(|| search::zarankiewicz_exact(m, n, s, t)).map_err(to_py)
}

#[pyfunction]
fn zarankiewicz_bound(m: u64, n: u64, s: u64, t: u64) -> f64 {
    bounds::zarankiewicz_bound(m, n, s, t)
}

/// Evaluates a formula by id; integers come back as Python ints and rationals as `Fraction`.
#[pyfunction]
#[pyo3(signature = (formula, params, kind = None))]
fn bound<'py>(
    py: Python<'py>,
    formula: &str,
    params: BTreeMap<String, u64>,
    kind: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let id: FormulaId = formula.parse().map_err(to_py)?;
    let report = bounds::evaluate(id, &params, kind).map_err(to_py)?;
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    let out = PyDict::new(py);
    for (name, value) in &report.values {
        match value {
            BoundValue::Integer(v) => out.set_item(name, v)?,
            BoundValue::Real(v) => out.set_item(name, v)?,
            BoundValue::Bool(v) => out.set_item(name, v)?,
            BoundValue::Rational(v) => {
                let (n, d): (&BigInt, &BigInt) = (v.numer(), v.denom());
                out.set_item(name, fraction.call1((n, d))?)?
            }
        }
    }
    Ok(out)
}

#[pyfunction]
fn export_cnf(n1: usize, n2: usize, r: u32, rainbow: (usize, usize), mono: (usize, usize)) -> PyResult<String> {
    Ok(search::export_cnf(n1, n2, r, pattern(rainbow)?, pattern(mono)?).to_dimacs())
}

/// Decodes a list of signed literals from a solver model.
#[pyfunction]
fn decode_model(n1: usize, n2: usize, r: u32, model: Vec<i64>) -> PyResult<PyColoring> {
    search::decode_model(n1, n2, r, &model).map(PyColoring).map_err(to_py)
}

/// Returns `(points, colors)` for the image of `c` in `Q_{n1,a} * Q_{n2,b}`.
#[pyfunction]
fn embed_coloring(c: &PyColoring, a: f64, b: f64) -> PyResult<(Vec<Vec<f64>>, Vec<Color>)> {
    let e = euclid::embed_coloring(&c.0, a, b).map_err(to_py)?;
    Ok((e.config.points().to_vec(), e.colors))
}

fn config(points: Vec<Vec<f64>>) -> PyResult<euclid::PointConfig> {
    let dim = points.first().map_or(0, Vec::len);
    euclid::PointConfig::new(dim, points, None).map_err(to_py)
}

/// Point correspondence between two configurations, or `None` if they are not congruent.
#[pyfunction]
#[pyo3(signature = (k1, k2, tol = euclid::DEFAULT_TOLERANCE))]
fn congruent(k1: Vec<Vec<f64>>, k2: Vec<Vec<f64>>, tol: f64) -> PyResult<Option<Vec<usize>>> {
    Ok(euclid::congruent(&config(k1)?, &config(k2)?, tol))
}

/// Returns `(branch, passed)` with branch `"mono"`, `"rainbow"` or `"none"`.
#[pyfunction]
#[pyo3(signature = (c, rainbow, mono, a = 1.0, b = 1.0, tol = euclid::DEFAULT_TOLERANCE))]
fn verify_translation(
    c: &PyColoring,
    rainbow: (usize, usize),
    mono: (usize, usize),
    a: f64,
    b: f64,
    tol: f64,
) -> PyResult<(String, bool)> {
    let report = euclid::verify_translation(&c.0, pattern(rainbow)?, pattern(mono)?, a, b, tol).map_err(to_py)?;
    let branch = match report.branch {
        euclid::TranslationBranch::Rainbow => "rainbow",
        euclid::TranslationBranch::Monochromatic => "mono",
        euclid::TranslationBranch::NoCertificate => "none",
    };
    Ok((branch.to_string(), report.passed()))
}

#[pymodule]
fn gallai_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyColoring>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(find_mono, m)?)?;
    m.add_function(wrap_pyfunction!(find_rainbow, m)?)?;
    m.add_function(wrap_pyfunction!(find_any, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(sample_rainbow, m)?)?;
    m.add_function(wrap_pyfunction!(block_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(random_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(star_avoiding_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(exists_avoiding, m)?)?;
    m.add_function(wrap_pyfunction!(min_forcing_n2, m)?)?;
    m.add_function(wrap_pyfunction!(zarankiewicz_exact, m)?)?;
    m.add_function(wrap_pyfunction!(zarankiewicz_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bound, m)?)?;
    m.add_function(wrap_pyfunction!(export_cnf, m)?)?;
    m.add_function(wrap_pyfunction!(decode_model, m)?)?;
    m.add_function(wrap_pyfunction!(embed_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(congruent, m)?)?;
    m.add_function(wrap_pyfunction!(verify_translation, m)?)?;
    Ok(())
}
