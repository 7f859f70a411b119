//! Python module `vnum`: graphs, clutters and their edge-ideal invariants.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use vnum_core::classify::{self, ReportOptions};
use vnum_core::formats::{self, output};
use vnum_core::{EdgeIdeal, FieldTag, SimplicialComplex, VertexSet};

create_exception!(vnum, RouteDisagreement, PyRuntimeError, "Two independent computations disagreed.");

fn err(e: vnum_core::Error) -> PyErr {
    match e {
        vnum_core::Error::RouteDisagreement { .. } => RouteDisagreement::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn field(name: &str) -> PyResult<FieldTag> {
    name.parse().map_err(|_| PyValueError::new_err(format!("unknown field {name:?}; use \"Q\" or \"GF2\"")))
}

fn fields(names: Option<Vec<String>>) -> PyResult<Vec<FieldTag>> {
    match names {
        None => Ok(FieldTag::ALL.to_vec()),
        Some(v) => v.iter().map(|s| field(s)).collect(),
    }
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any().unbind(),
            None => n.as_i64().unwrap_or_default().into_pyobject(py)?.into_any().unbind(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        Value::Array(a) => {
            let items = a.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any().unbind()
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any().unbind()
        }
    })
}

/// A clutter: an antichain of nonempty vertex sets on vertices `1..=n`.
#[pyclass(module = "vnum", frozen)]
struct Clutter {
    inner: vnum_core::Clutter,
}

/// A simple graph on vertices `1..=n`.
#[pyclass(module = "vnum", frozen)]
struct Graph {
    inner: vnum_core::Graph,
}

/// Borrow the clutter underneath either Python class.
fn clutter_of(obj: &Bound<'_, PyAny>) -> PyResult<vnum_core::Clutter> {
    if let Ok(g) = obj.cast::<Graph>() {
        return Ok(g.get().inner.clutter().clone());
    }
    if let Ok(c) = obj.cast::<Clutter>() {
        return Ok(c.get().inner.clone());
    }
    Err(PyValueError::new_err("expected a vnum.Graph or vnum.Clutter"))
}

fn report_dict(py: Python<'_>, c: &vnum_core::Clutter, names: Option<Vec<String>>, oracle_cap: usize) -> PyResult<Py<PyAny>> {
    let opts = ReportOptions { fields: fields(names)?, oracle_cap };
    let r = py.detach(|| classify::full_report(c, &opts)).map_err(err)?;
    to_py(py, &output::report_json(&r, None))
}

#[pymethods]
impl Clutter {
    #[new]
    fn new(n: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Clutter { inner: vnum_core::Clutter::from_edge_lists(n, edges).map_err(err)? })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edge_lists()
    }

    fn v_number(&self) -> PyResult<usize> {
        classify::v_number(&self.inner).map_err(err)
    }

    /// A stable set attaining the v-number.
    fn v_number_witness(&self) -> PyResult<Vec<usize>> {
        Ok(self.inner.v_number_witness().map_err(err)?.to_vec())
    }

    #[pyo3(signature = (field = "Q"))]
    fn regularity(&self, field: &str) -> PyResult<usize> {
        Ok(classify::regularity(&self.inner, self::field(field)?))
    }

    fn independence_number(&self) -> usize {
        self.inner.independence_number()
    }

    fn cover_number(&self) -> usize {
        self.inner.cover_number()
    }

    fn maximal_stable_sets(&self) -> Vec<Vec<usize>> {
        self.inner.maximal_stable_sets().iter().map(VertexSet::to_vec).collect()
    }

    /// The clutter of minimal vertex covers.
    fn blocker(&self) -> PyResult<Clutter> {
        Ok(Clutter { inner: self.inner.blocker().map_err(err)? })
    }

    #[pyo3(signature = (fields = None, oracle_cap = classify::DEFAULT_ORACLE_CAP))]
    fn report(&self, py: Python<'_>, fields: Option<Vec<String>>, oracle_cap: usize) -> PyResult<Py<PyAny>> {
        report_dict(py, &self.inner, fields, oracle_cap)
    }

    fn __repr__(&self) -> String {
        format!("Clutter({}, {:?})", self.inner.vertex_count(), self.inner.edge_lists())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph { inner: vnum_core::Graph::new(n, edges).map_err(err)? })
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        Ok(Graph { inner: formats::parse_graph6(line).map_err(err)? })
    }

    fn to_graph6(&self) -> String {
        formats::to_graph6(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edge_pairs()
    }

    fn as_clutter(&self) -> Clutter {
        Clutter { inner: self.inner.clutter().clone() }
    }

    fn v_number(&self) -> PyResult<usize> {
        classify::v_number(&self.inner).map_err(err)
    }

    #[pyo3(signature = (field = "Q"))]
    fn regularity(&self, field: &str) -> PyResult<usize> {
        Ok(classify::regularity(&self.inner, self::field(field)?))
    }

    fn independence_number(&self) -> usize {
        self.inner.independence_number()
    }

    fn independent_domination(&self) -> usize {
        self.inner.independent_domination()
    }

    fn domination_number(&self) -> usize {
        self.inner.domination_number()
    }

    fn is_w2(&self) -> PyResult<bool> {
        classify::is_w2(&self.inner).map_err(err)
    }

    fn is_edge_critical(&self) -> PyResult<bool> {
        classify::is_edge_critical(&self.inner).map_err(err)
    }

    #[pyo3(signature = (field = "Q"))]
    fn is_cohen_macaulay(&self, field: &str) -> PyResult<bool> {
        Ok(classify::is_cm_graph(&self.inner, self::field(field)?))
    }

    /// Whether the second symbolic power of the edge ideal is Cohen-Macaulay.
    #[pyo3(signature = (field = "Q", oracle_cap = classify::DEFAULT_ORACLE_CAP))]
    fn symbolic_square_cm(&self, field: &str, oracle_cap: usize) -> PyResult<bool> {
        let v = classify::symbolic_square_cm_checked(&self.inner, self::field(field)?, oracle_cap).map_err(err)?;
        Ok(v.cohen_macaulay)
    }

    fn complement(&self) -> Graph {
        Graph { inner: self.inner.complement() }
    }

    fn whisker_graph(&self) -> PyResult<Graph> {
        Ok(Graph { inner: self.inner.whisker_graph().map_err(err)? })
    }

    #[pyo3(signature = (fields = None, oracle_cap = classify::DEFAULT_ORACLE_CAP))]
    fn report(&self, py: Python<'_>, fields: Option<Vec<String>>, oracle_cap: usize) -> PyResult<Py<PyAny>> {
        report_dict(py, &self.inner, fields, oracle_cap)
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.inner.vertex_count(), self.inner.edge_pairs())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Parse an edge-list document into a `Graph` or a `Clutter`.
#[pyfunction]
fn parse_edge_list(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    let doc = formats::parse_edge_list(text).map_err(err)?;
    Ok(match doc.kind {
        formats::DocumentKind::Graph => {
            Py::new(py, Graph { inner: doc.graph().map_err(err)? })?.into_any()
        }
        formats::DocumentKind::Clutter => Py::new(py, Clutter { inner: doc.clutter().clone() })?.into_any(),
    })
}

/// Exponent vectors of the minimal generators of the k-th symbolic power.
#[pyfunction]
#[pyo3(signature = (obj, k = 2))]
fn symbolic_power(obj: &Bound<'_, PyAny>, k: u32) -> PyResult<Vec<Vec<u32>>> {
    let c = clutter_of(obj)?;
    let ideal = EdgeIdeal::new(&c).symbolic_power(k).map_err(err)?;
    Ok(ideal.generators().iter().map(|g| g.exponents().to_vec()).collect())
}

/// Reduced homology ranks `[H_-1, H_0, ...]` of the complex with the given facets.
#[pyfunction]
#[pyo3(signature = (n, facets, field = "Q"))]
fn reduced_homology(n: usize, facets: Vec<Vec<usize>>, field: &str) -> PyResult<Vec<usize>> {
    let sets = facets
        .into_iter()
        .map(|f| VertexSet::from_vertices(n, f))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let k = SimplicialComplex::from_faces(n, sets).map_err(err)?;
    Ok(k.reduced_homology(self::field(field)?).ranks)
}

#[pymodule]
pub fn vnum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Clutter>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(parse_edge_list, m)?)?;
    m.add_function(wrap_pyfunction!(symbolic_power, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_homology, m)?)?;
    m.add("RouteDisagreement", m.py().get_type::<RouteDisagreement>())?;
    m.add("SCHEMA", output::SCHEMA)?;
    Ok(())
}
