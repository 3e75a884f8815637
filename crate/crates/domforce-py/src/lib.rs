//! Python bindings: a Graph class plus module-level functions for the exact
//! solvers, forcing traces, bound reports, and catalog verification.
//!
//! Build the importable module with `--features extension-module` (the
//! default build links libpython so the workspace test harness can run).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use domforce::catalog::{self, Profile};
use domforce::{
    extract_chains, forcing_closure, is_dominating_set, is_zero_forcing_set, naive_oracle,
    Error, FamilySpec, Graph, Invariant, Solver, VertexSet, Witness,
};

fn err(e: Error) -> PyErr {
    match e {
        Error::CapExceeded { .. } | Error::OracleLimit { .. } | Error::InvalidCap(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn solver_with(cap: Option<usize>) -> PyResult<Solver> {
    match cap {
        Some(c) => Solver::with_cap(c).map_err(err),
        None => Ok(Solver::new()),
    }
}

fn set_from(g: &Graph, ids: Vec<usize>) -> PyResult<VertexSet> {
    VertexSet::from_ids(g.order(), ids).map_err(err)
}

/// An undirected simple graph with optional display labels.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Builds a graph from a family spec string such as "coconut:3,2".
    #[staticmethod]
    fn from_family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        Ok(Self {
            inner: spec.generate().map_err(err)?,
        })
    }

    /// Builds a graph from an explicit order and edge list.
    #[staticmethod]
    fn from_edges(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: Graph::build(order, &edges).map_err(err)?,
        })
    }

    /// Parses the "n m" edge-list text format (with optional label comments).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: Graph::parse_edge_list(text).map_err(err)?,
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn label(&self, v: usize) -> PyResult<String> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.label(v))
    }

    fn labels(&self) -> Vec<String> {
        (0..self.inner.order()).map(|v| self.inner.label(v)).collect()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// The splitting graph: one shadow vertex per vertex, adjacent to the
    /// original's neighborhood.
    fn splitting(&self) -> Self {
        Self {
            inner: domforce::splitting(&self.inner),
        }
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list(&[])
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, edges={})",
            self.inner.order(),
            self.inner.edge_count()
        )
    }
}

fn solve(
    g: &PyGraph,
    cap: Option<usize>,
    run: impl Fn(&Solver, &Graph) -> domforce::Result<domforce::InvariantResult>,
) -> PyResult<(usize, Vec<usize>)> {
    let solver = solver_with(cap)?;
    let r = run(&solver, &g.inner).map_err(err)?;
    let witness = match r.witness.as_set() {
        Some(s) => s.to_vec(),
        None => Vec::new(),
    };
    Ok((r.value, witness))
}

/// Z(G) and its lexicographically least minimum forcing set.
#[pyfunction]
#[pyo3(signature = (g, cap=None))]
fn zero_forcing_number(g: &PyGraph, cap: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
    solve(g, cap, |s, gr| s.zero_forcing_number(gr))
}

/// gamma(G) and its lexicographically least minimum dominating set.
#[pyfunction]
#[pyo3(signature = (g, cap=None))]
fn domination_number(g: &PyGraph, cap: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
    solve(g, cap, |s, gr| s.domination_number(gr))
}

/// F_d(G) and its lexicographically least minimum dom-forcing set.
#[pyfunction]
#[pyo3(signature = (g, cap=None))]
fn dom_forcing_number(g: &PyGraph, cap: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
    solve(g, cap, |s, gr| s.dom_forcing_number(gr))
}

/// pt(G): fewest rounds over all minimum forcing sets, with a witness set.
#[pyfunction]
#[pyo3(signature = (g, cap=None))]
fn min_propagation_time(g: &PyGraph, cap: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
    solve(g, cap, |s, gr| s.min_propagation_time(gr))
}

/// P(G) and an optimal induced path cover.
#[pyfunction]
#[pyo3(signature = (g, cap=None))]
fn path_cover_number(g: &PyGraph, cap: Option<usize>) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let solver = solver_with(cap)?;
    let r = solver.path_cover_number(&g.inner).map_err(err)?;
    match r.witness {
        Witness::Paths(paths) => Ok((r.value, paths)),
        Witness::Set(_) => unreachable!("path cover witness is a path list"),
    }
}

/// True when `ids` is a dominating set of g.
#[pyfunction]
fn is_dominating(g: &PyGraph, ids: Vec<usize>) -> PyResult<bool> {
    Ok(is_dominating_set(&g.inner, &set_from(&g.inner, ids)?))
}

/// True when `ids` is a zero forcing set of g.
#[pyfunction]
fn is_forcing(g: &PyGraph, ids: Vec<usize>) -> PyResult<bool> {
    Ok(is_zero_forcing_set(&g.inner, &set_from(&g.inner, ids)?))
}

/// Independent reference solver for small graphs (order <= 12).
#[pyfunction]
fn oracle(g: &PyGraph, invariant: &str) -> PyResult<(usize, Vec<usize>)> {
    let inv = match invariant {
        "z" => Invariant::Z,
        "gamma" => Invariant::Gamma,
        "fd" => Invariant::Fd,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown invariant '{other}' (use z, gamma, or fd)"
            )))
        }
    };
    let r = naive_oracle(&g.inner, inv).map_err(err)?;
    Ok((r.value, r.witness.as_set().unwrap().to_vec()))
}

/// Runs the forcing process round by round from the given initial set.
#[pyfunction]
fn trace<'py>(py: Python<'py>, g: &PyGraph, initial: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
    let b = set_from(&g.inner, initial)?;
    let t = forcing_closure(&g.inner, &b);
    let out = PyDict::new(py);
    out.set_item("initial", t.initial.to_vec())?;
    let rounds = PyList::empty(py);
    for round in &t.rounds {
        let forces: Vec<(usize, usize)> =
            round.forces.iter().map(|f| (f.forcer, f.forced)).collect();
        rounds.append(forces)?;
    }
    out.set_item("rounds", rounds)?;
    out.set_item("final", t.final_set.to_vec())?;
    out.set_item("complete", t.is_complete())?;
    if t.is_complete() {
        out.set_item("propagation_time", t.round_count())?;
        out.set_item("chains", extract_chains(&t).map_err(err)?.chains)?;
    } else {
        out.set_item("propagation_time", py.None())?;
        out.set_item("chains", py.None())?;
    }
    Ok(out)
}

/// Bound reports for F_d(G) as dicts with lower/upper/detail.
#[pyfunction]
#[pyo3(signature = (g, cap=None))]
fn bounds<'py>(py: Python<'py>, g: &PyGraph, cap: Option<usize>) -> PyResult<Bound<'py, PyList>> {
    let solver = solver_with(cap)?;
    let reports = solver.fd_bounds(&g.inner).map_err(err)?;
    let out = PyList::empty(py);
    for r in reports {
        let d = PyDict::new(py);
        d.set_item("source", serde_json::to_value(r.source).unwrap().as_str().unwrap())?;
        d.set_item("lower", r.lower)?;
        d.set_item("upper", r.upper)?;
        d.set_item("detail", r.detail)?;
        out.append(d)?;
    }
    Ok(out)
}

/// Verifies catalog theorems; returns the report as nested dicts/lists.
#[pyfunction]
#[pyo3(signature = (theorems=None, profile="quick", cap=None))]
fn verify<'py>(
    py: Python<'py>,
    theorems: Option<Vec<String>>,
    profile: &str,
    cap: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let profile: Profile = profile
        .parse()
        .map_err(|e: String| PyValueError::new_err(e))?;
    let solver = solver_with(cap)?;
    let report = catalog::verify_all(profile, &solver, theorems.as_deref()).map_err(err)?;
    let value = serde_json::to_value(&report).expect("report serializes");
    json_to_py(py, &value)
}

/// Closed-form expectation for one theorem at one parameter tuple, without
/// running the solvers. `params` may be omitted, an int, an (m, n) pair, or
/// a family spec string such as "star:4" for entries quantified over a
/// family. Returns a list of (quantity, expected) pairs where expected is a
/// dict like {"kind": "exact", "value": 4}.
#[pyfunction]
#[pyo3(signature = (theorem, params=None))]
fn expected<'py>(
    py: Python<'py>,
    theorem: &str,
    params: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    let p = match params {
        None => catalog::TheoremParams::None,
        Some(obj) => {
            if let Ok(n) = obj.extract::<usize>() {
                catalog::TheoremParams::N(n)
            } else if let Ok((m, n)) = obj.extract::<(usize, usize)>() {
                catalog::TheoremParams::MN(m, n)
            } else if let Ok(s) = obj.extract::<String>() {
                catalog::TheoremParams::Inner(FamilySpec::parse(&s).map_err(err)?)
            } else {
                return Err(PyValueError::new_err(
                    "params must be omitted, an int, an (m, n) pair, or a family spec string",
                ));
            }
        }
    };
    let checks = catalog::expected(theorem, &p).map_err(err)?;
    let value = serde_json::to_value(&checks).expect("expectations serialize");
    json_to_py(py, &value)
}

/// The catalog's theorem ids in canonical order.
#[pyfunction]
fn theorem_ids() -> Vec<&'static str> {
    catalog::theorem_ids().to_vec()
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any()
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, val) in map {
                dict.set_item(k, json_to_py(py, val)?)?;
            }
            dict.into_any()
        }
    })
}

#[pymodule]
fn domforce_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(zero_forcing_number, m)?)?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(dom_forcing_number, m)?)?;
    m.add_function(wrap_pyfunction!(min_propagation_time, m)?)?;
    m.add_function(wrap_pyfunction!(path_cover_number, m)?)?;
    m.add_function(wrap_pyfunction!(is_dominating, m)?)?;
    m.add_function(wrap_pyfunction!(is_forcing, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(expected, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    Ok(())
}
