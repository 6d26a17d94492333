//! Python bindings: `import _hyperconn`.

use hyperconn::combinatorics;
use hyperconn::conditions::{self, Mode, TheoremId};
use hyperconn::degseq;
use hyperconn::error::Error;
use hyperconn::extremal::{self, ExtremalSpec};
use hyperconn::hypergraph;
use hyperconn::realizations::{self, OracleOptions, RealizationQuery};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(_hyperconn, HyperconnError, PyException);
create_exception!(_hyperconn, BudgetExhausted, HyperconnError);
create_exception!(_hyperconn, NotHypergraphic, HyperconnError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted { .. } => BudgetExhausted::new_err(e.to_string()),
        Error::NotHypergraphic { .. } => NotHypergraphic::new_err(e.to_string()),
        _ => HyperconnError::new_err(e.to_string()),
    }
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    match mode {
        "sound" => Ok(Mode::Sound),
        "paper-literal" | "paper_literal" => Ok(Mode::PaperLiteral),
        _ => Err(PyValueError::new_err(format!("unknown mode {mode:?}"))),
    }
}

/// A sorted degree sequence of an r-uniform hypergraph.
#[pyclass(name = "DegreeSequence", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDegreeSequence(degseq::DegreeSequence);

#[pymethods]
impl PyDegreeSequence {
    #[new]
    fn new(values: Vec<i64>, r: usize) -> PyResult<Self> {
        degseq::DegreeSequence::new(&values, r).map(Self).map_err(to_py)
    }

    #[getter]
    fn values(&self) -> Vec<u64> {
        self.0.values().to_vec()
    }

    #[getter]
    fn r(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn min_degree(&self) -> u64 {
        self.0.min_degree()
    }

    fn majorizes(&self, other: &PyDegreeSequence) -> PyResult<bool> {
        self.0.majorizes(&other.0).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("DegreeSequence([{}], r={})", self.0, self.0.rank())
    }
}

/// A simple r-uniform hypergraph on vertices 0..n.
#[pyclass(name = "Hypergraph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyHypergraph(hypergraph::Hypergraph);

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        hypergraph::Hypergraph::new(n, r, edges).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn complete(n: usize, r: usize) -> PyResult<Self> {
        hypergraph::Hypergraph::complete(n, r).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        hypergraph::Hypergraph::from_text(text).map(Self).map_err(to_py)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn r(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.0.edges().to_vec()
    }

    fn degrees(&self) -> Vec<u64> {
        self.0.degrees()
    }

    fn degree_sequence(&self) -> PyResult<PyDegreeSequence> {
        self.0.degree_sequence().map(PyDegreeSequence).map_err(to_py)
    }

    fn edge_connectivity(&self) -> PyResult<u64> {
        self.0.edge_connectivity().map_err(to_py)
    }

    fn edge_connectivity_bruteforce(&self) -> PyResult<u64> {
        self.0.edge_connectivity_bruteforce().map_err(to_py)
    }

    fn is_super_edge_connected(&self) -> PyResult<bool> {
        self.0.is_super_edge_connected().map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(n={}, r={}, m={})", self.0.n(), self.0.rank(), self.0.edge_count())
    }
}

/// Outcome of a degree-condition check.
#[pyclass(name = "Verdict", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyVerdict(conditions::Verdict);

#[pymethods]
impl PyVerdict {
    #[getter]
    fn satisfied(&self) -> bool {
        self.0.is_satisfied()
    }

    #[getter]
    fn condition_id(&self) -> Option<String> {
        self.0.condition_id().map(|c| c.to_string())
    }

    #[getter]
    fn j(&self) -> Option<usize> {
        self.0.j()
    }

    /// (t, s) of the violating crossing profile, if the condition has one.
    #[getter]
    fn profile(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        let p = self.0.violation.as_ref()?.profile.as_ref()?;
        Some((p.t.clone(), p.s.clone()))
    }

    #[getter]
    fn antecedent(&self) -> Vec<(usize, u128)> {
        self.0.violation.as_ref().map(|v| v.antecedent_indices.clone()).unwrap_or_default()
    }

    #[getter]
    fn failed_consequent(&self) -> Vec<(usize, u128)> {
        self.0.violation.as_ref().map(|v| v.failed_consequent_bounds.clone()).unwrap_or_default()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("verdict serializes")
    }

    fn __bool__(&self) -> bool {
        self.0.is_satisfied()
    }

    fn __repr__(&self) -> String {
        match (self.condition_id(), self.j()) {
            (None, _) => "Verdict(satisfied)".into(),
            (Some(id), Some(j)) => format!("Verdict(violated {id} at j={j})"),
            (Some(id), None) => format!("Verdict(violated {id})"),
        }
    }
}

/// Evaluates a theorem ("2.1" ... "4.4") on a degree sequence.
#[pyfunction]
#[pyo3(signature = (theorem, d, k=None, mode="sound"))]
fn check(theorem: &str, d: &PyDegreeSequence, k: Option<u64>, mode: &str) -> PyResult<PyVerdict> {
    let id: TheoremId = theorem.parse().map_err(to_py)?;
    conditions::check(id, &d.0, k, parse_mode(mode)?).map(PyVerdict).map_err(to_py)
}

/// Whether every realization has the property; returns (holds, counterexample).
#[pyfunction]
#[pyo3(signature = (property, d, k=None, workers=1, budget=None))]
fn forcibly(
    py: Python<'_>,
    property: &str,
    d: &PyDegreeSequence,
    k: Option<u64>,
    workers: usize,
    budget: Option<u64>,
) -> PyResult<(bool, Option<PyHypergraph>)> {
    let opts = OracleOptions { budget, workers: workers.max(1) };
    let d = d.0.clone();
    let outcome = match property {
        "k-edge" => {
            let k = k.ok_or_else(|| PyValueError::new_err("property 'k-edge' needs k"))?;
            py.detach(|| realizations::forcibly_k_edge_connected(&d, k, opts))
        }
        "super" => py.detach(|| realizations::forcibly_super(&d, opts)),
        "maximal" => py.detach(|| realizations::forcibly_maximally(&d, opts)),
        _ => return Err(PyValueError::new_err(format!("unknown property {property:?}"))),
    }
    .map_err(to_py)?;
    Ok((outcome.holds, outcome.counterexample.map(PyHypergraph)))
}

/// Realizations in lexicographic edge-set order.
#[pyfunction]
#[pyo3(signature = (d, limit=None, budget=None))]
fn realizations_of(d: &PyDegreeSequence, limit: Option<u64>, budget: Option<u64>) -> PyResult<Vec<PyHypergraph>> {
    let q = RealizationQuery { d: d.0.clone(), limit, budget };
    q.iter().map_err(to_py)?.map(|h| h.map(PyHypergraph).map_err(to_py)).collect()
}

#[pyfunction]
fn compute_g(k: u64, r: usize) -> PyResult<u64> {
    if k < 2 || r < 2 {
        return Err(PyValueError::new_err("compute_g needs k >= 2 and r >= 2"));
    }
    Ok(combinatorics::compute_g(k, r))
}

#[pyfunction]
fn compute_jstar(n: usize, r: usize, c: u64) -> Option<usize> {
    combinatorics::compute_jstar(n, r, c)
}

#[pyfunction]
fn compute_j0(n: usize, z: u64, r: usize) -> Option<usize> {
    combinatorics::compute_j0(n, z, r)
}

/// Admissible crossing profiles as (t, s) pairs, lexicographically ordered.
#[pyfunction]
fn enumerate_profiles(c: usize, r: usize, j: usize, n: usize) -> Vec<(Vec<u64>, Vec<u64>)> {
    combinatorics::enumerate_profiles(c, r, j, n).into_iter().map(|p| (p.t, p.s)).collect()
}

#[pyfunction]
fn build_extremal(n: usize, j: usize, r: usize, t: Vec<u64>, s: Vec<u64>) -> PyResult<PyHypergraph> {
    let profile = combinatorics::CrossingProfile { t, s, j, n, r };
    extremal::build_extremal(&ExtremalSpec { n, j, r, profile }).map(PyHypergraph).map_err(to_py)
}

/// Majorizing sequence and realization with edge connectivity k - 1.
#[pyfunction]
fn strongest_witness(d: &PyDegreeSequence, k: u64, verdict: &PyVerdict) -> PyResult<(PyDegreeSequence, PyHypergraph)> {
    let w = extremal::strongest_witness(&d.0, k, &verdict.0).map_err(to_py)?;
    Ok((PyDegreeSequence(w.dprime), PyHypergraph(w.hypergraph)))
}

#[pymodule]
fn _hyperconn(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HyperconnError", m.py().get_type::<HyperconnError>())?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    m.add("NotHypergraphic", m.py().get_type::<NotHypergraphic>())?;
    m.add_class::<PyDegreeSequence>()?;
    m.add_class::<PyHypergraph>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(forcibly, m)?)?;
    m.add_function(wrap_pyfunction!(realizations_of, m)?)?;
    m.add_function(wrap_pyfunction!(compute_g, m)?)?;
    m.add_function(wrap_pyfunction!(compute_jstar, m)?)?;
    m.add_function(wrap_pyfunction!(compute_j0, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_profiles, m)?)?;
    m.add_function(wrap_pyfunction!(build_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(strongest_witness, m)?)?;
    Ok(())
}
