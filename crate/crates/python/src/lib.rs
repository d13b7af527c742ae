//! Python bindings: graphs, polynomials and the main workbench operations.

use graphpoly::dpower::{compare as dp_compare, InvariantHandle, Mode};
use graphpoly::graph::{canonical_form, enumerate_graphs, is_isomorphic, make_family, parse_graph_file, write_graph_file, FamilySpec};
use graphpoly::invariants::{compute as compute_value, PolyKind, PolyValue};
use graphpoly::orthopoly::{ortho as ortho_poly, OrthoFamily};
use graphpoly::poly::{format_rational, parse_rational};
use graphpoly::recognition::brute_recognize;
use graphpoly::recurrence::fit_family;
use graphpoly::{Caps, Error};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(graphpoly_py, CapExceeded, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::Input(msg) => PyValueError::new_err(msg),
        cap @ Error::Cap { .. } => CapExceeded::new_err(cap.to_string()),
    }
}

fn caps(cap_n: Option<usize>, cap_m: Option<usize>, cap_partition: Option<usize>) -> Caps {
    let d = Caps::DEFAULT;
    Caps {
        vertex_subsets: cap_n.unwrap_or(d.vertex_subsets),
        edge_subsets: cap_m.unwrap_or(d.edge_subsets),
        partition: cap_partition.unwrap_or(d.partition),
        enumeration: d.enumeration,
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "graphpoly_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: graphpoly::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = graphpoly::Graph::from_edges(n, &edges).map_err(err)?;
        Ok(PyGraph { inner })
    }

    /// Builds a family member such as `"cycle:5"` or `"grid:2x3"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        Ok(PyGraph {
            inner: make_family(&spec).map_err(err)?,
        })
    }

    /// Reads the `n m` header plus edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_graph_file(text).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    /// `(vertices, edges, components)`.
    fn signature(&self) -> (usize, usize, usize) {
        (self.inner.n(), self.inner.edge_count(), self.inner.component_count())
    }

    fn complement(&self) -> Self {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        is_isomorphic(&self.inner, &other.inner)
    }

    /// The canonical labelling, as a graph.
    fn canonical(&self) -> PyResult<Self> {
        let cf = canonical_form(&self.inner, usize::MAX).map_err(err)?;
        Ok(PyGraph { inner: cf.to_graph() })
    }

    fn to_text(&self) -> String {
        write_graph_file(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.inner.n(), self.inner.edges())
    }
}

/// An exact univariate polynomial over the rationals.
#[pyclass(name = "Poly", module = "graphpoly_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoly {
    inner: graphpoly::UniPoly,
}

#[pymethods]
impl PyPoly {
    /// Ascending coefficients in text form, e.g. `"0 2 1"` or `"1/2 0 3"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyPoly {
            inner: text.parse().map_err(err)?,
        })
    }

    /// Ascending coefficients as strings (`"3"`, `"-1/2"`).
    #[getter]
    fn coeffs(&self) -> Vec<String> {
        self.inner.coeffs().iter().map(format_rational).collect()
    }

    /// Degree, or `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree().finite()
    }

    /// Exact value at an integer or rational given as text.
    fn eval(&self, x: &Bound<'_, PyAny>) -> PyResult<String> {
        let x = parse_rational(&x.str()?.to_string()).map_err(err)?;
        Ok(format_rational(&self.inner.eval(&x)))
    }

    fn __add__(&self, other: &PyPoly) -> Self {
        PyPoly {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &PyPoly) -> Self {
        PyPoly {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &PyPoly) -> Self {
        PyPoly {
            inner: &self.inner * &other.inner,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }
}

/// Computes `poly` (e.g. `"chrom"`, `"ind:connected"`, `"tutte"`) on a
/// graph. Univariate results come back as `Poly`, Tutte as its grid text.
#[pyfunction]
#[pyo3(signature = (poly, graph, cap_n=None, cap_m=None, cap_partition=None))]
fn compute<'py>(
    py: Python<'py>,
    poly: &str,
    graph: &PyGraph,
    cap_n: Option<usize>,
    cap_m: Option<usize>,
    cap_partition: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let kind: PolyKind = poly.parse().map_err(err)?;
    let caps = caps(cap_n, cap_m, cap_partition);
    let value = py
        .detach(|| compute_value(&graph.inner, &kind, &caps))
        .map_err(err)?;
    match value {
        PolyValue::Uni(p) => Ok(Bound::new(py, PyPoly { inner: p })?.into_any()),
        bi @ PolyValue::Bi(_) => Ok(bi.to_string().into_pyobject(py)?.into_any()),
    }
}

/// Orthogonal polynomial `T`, `U`, `He` or `L` of degree `n`.
#[pyfunction]
fn ortho(family: &str, n: usize) -> PyResult<PyPoly> {
    let fam: OrthoFamily = family.parse().map_err(err)?;
    Ok(PyPoly {
        inner: ortho_poly(fam, n),
    })
}

/// All graphs on `n` vertices up to isomorphism.
#[pyfunction]
fn enumerate(py: Python<'_>, n: usize) -> PyResult<Vec<PyGraph>> {
    let classes = py
        .detach(|| enumerate_graphs(n, Caps::DEFAULT.enumeration))
        .map_err(err)?;
    Ok(classes.iter().map(|g| PyGraph { inner: g.clone() }).collect())
}

/// Fits a recurrence to `poly` over `family` members `a..=b`; returns
/// the report as a dict.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (poly, family, a, b, max_order, max_deg, holdout=3))]
fn fit<'py>(
    py: Python<'py>,
    poly: &str,
    family: &str,
    a: usize,
    b: usize,
    max_order: usize,
    max_deg: usize,
    holdout: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let kind: PolyKind = poly.parse().map_err(err)?;
    let report = py
        .detach(|| fit_family(&kind, family, a, b, max_order, max_deg, holdout, &Caps::DEFAULT))
        .map_err(err)?;
    to_py(py, &report)
}

/// Graphs on at most `bound` vertices whose `poly` equals `target`.
#[pyfunction]
#[pyo3(signature = (poly, target, bound=5))]
fn recognize(py: Python<'_>, poly: &str, target: &PyPoly, bound: usize) -> PyResult<Vec<PyGraph>> {
    let kind: PolyKind = poly.parse().map_err(err)?;
    let target = PolyValue::Uni(target.inner.clone());
    let result = py
        .detach(|| brute_recognize(&target, &kind, bound, &Caps::DEFAULT))
        .map_err(err)?;
    Ok(result.matches.into_iter().map(|g| PyGraph { inner: g }).collect())
}

/// Compares two invariants by distinctive power (`mode` is `"dp"` or
/// `"sdp"`); returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (p, q, mode="dp", bound=6))]
fn compare<'py>(py: Python<'py>, p: &str, q: &str, mode: &str, bound: usize) -> PyResult<Bound<'py, PyAny>> {
    let hp: InvariantHandle = p.parse().map_err(err)?;
    let hq: InvariantHandle = q.parse().map_err(err)?;
    let mode: Mode = mode.parse().map_err(err)?;
    let report = py
        .detach(|| dp_compare(&hp, &hq, mode, bound, &Caps::DEFAULT))
        .map_err(err)?;
    to_py(py, &report)
}

/// Runs the command-line front end; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(py: Python<'_>, args: Vec<String>) -> (i32, String, String) {
    let out = py.detach(|| graphpoly::cli::run(std::iter::once("graphpoly".to_string()).chain(args)));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn graphpoly_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPoly>()?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(ortho, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(fit, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
