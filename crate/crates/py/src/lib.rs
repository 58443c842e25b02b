//! Python bindings: the main graph type and the laboratory's operations
//! (family/expression generation, parameters, sparing numbers, weak and
//! k-uniform labelings, verification, and the claims catalog).

use std::collections::{BTreeMap, BTreeSet};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use setlab_core::graph::Graph;
use setlab_core::intset::IntSet;
use setlab_core::labeling::{self, LabelingReport, SetLabeling};
use setlab_core::{claims, expr, io, params, sparing, DEFAULT_EXACT_CAP};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite simple undirected graph with stable vertex names.
#[pyclass(name = "Graph", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

impl PyGraph {
    fn labeling_from(&self, labels: BTreeMap<String, Vec<u64>>) -> PyResult<SetLabeling> {
        let mut f = SetLabeling::new();
        for (name, elems) in labels {
            let set = IntSet::new(elems)
                .ok_or_else(|| value_err(format!("empty set for vertex {name:?}")))?;
            f.insert(name, set);
        }
        Ok(f)
    }

    fn labeling_dict<'py>(&self, py: Python<'py>, f: &SetLabeling) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (name, set) in f.iter() {
            d.set_item(name, set.elements().to_vec())?;
        }
        Ok(d)
    }

    fn report_dict<'py>(&self, py: Python<'py>, r: &LabelingReport) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        d.set_item("iasi", r.is_iasi)?;
        d.set_item("wiasi", r.is_wiasi)?;
        d.set_item("siasi", r.is_siasi)?;
        d.set_item("mono_vertices", r.mono_vertex_count)?;
        d.set_item("mono_edges", r.mono_edge_count)?;
        d.set_item("uniformity", r.uniformity)?;
        let violations: Vec<String> = r
            .violations
            .iter()
            .map(|v| serde_json::to_string(v).expect("serializable"))
            .collect();
        d.set_item("violations", violations)?;
        Ok(d)
    }

    fn sparing_dict<'py>(
        &self,
        py: Python<'py>,
        r: &sparing::SparingResult,
    ) -> PyResult<Bound<'py, PyDict>> {
        let g = &self.inner;
        let d = PyDict::new(py);
        d.set_item("value", r.value)?;
        d.set_item(
            "witness_nonmono",
            r.witness_nonmono
                .iter()
                .map(|&v| g.name(v).to_string())
                .collect::<Vec<_>>(),
        )?;
        d.set_item(
            "witness_mono_edges",
            r.witness_mono_edges
                .iter()
                .map(|&(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
                .collect::<Vec<_>>(),
        )?;
        d.set_item("exact", r.exact)?;
        d.set_item("explored", r.explored)?;
        Ok(d)
    }
}

#[pymethods]
impl PyGraph {
    /// Build a graph from a family or operation expression,
    /// e.g. `"join(K1, cycle(5))"` or `"gear:4"`.
    #[staticmethod]
    fn generate(expression: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: expr::eval_graph(expression).map_err(value_err)?,
        })
    }

    /// Parse the edge-list or JSON graph format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: io::read_graph(text).map_err(value_err)?,
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    /// Edges as name pairs.
    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .into_iter()
            .map(|(u, v)| (self.inner.name(u).to_string(), self.inner.name(v).to_string()))
            .collect()
    }

    /// Proper 2-coloring as two name lists, or None.
    fn bipartition(&self) -> Option<(Vec<String>, Vec<String>)> {
        setlab_core::graph::bipartition(&self.inner).map(|(a, b)| {
            let names = |side: Vec<usize>| {
                side.into_iter()
                    .map(|v| self.inner.name(v).to_string())
                    .collect()
            };
            (names(a), names(b))
        })
    }

    /// Exact graph parameters; fields above the cap come back as None.
    #[pyo3(signature = (cap = DEFAULT_EXACT_CAP))]
    fn parameters<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyDict>> {
        let p = params::parameters_with_cap(&self.inner, cap);
        let d = PyDict::new(py);
        d.set_item("order", p.order)?;
        d.set_item("size", p.size)?;
        d.set_item("matching_number", p.matching_number)?;
        d.set_item("vertex_cover_number", p.vertex_cover_number)?;
        d.set_item("independence_number", p.independence_number)?;
        d.set_item("chromatic_number", p.chromatic_number)?;
        d.set_item("diameter", p.diameter)?;
        d.set_item("is_bipartite", p.is_bipartite)?;
        d.set_item("is_eulerian", p.is_eulerian)?;
        Ok(d)
    }

    /// Exact sparing number with witness.
    #[pyo3(signature = (cap = DEFAULT_EXACT_CAP))]
    fn sparing<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyDict>> {
        let r = sparing::sparing_exact_with_cap(&self.inner, cap).map_err(value_err)?;
        self.sparing_dict(py, &r)
    }

    /// Greedy upper bound on the sparing number.
    fn sparing_heuristic<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = sparing::sparing_heuristic(&self.inner);
        self.sparing_dict(py, &r)
    }

    /// Solve, construct the witness weak labeling, verify it, and return it
    /// as a name -> elements dict.
    #[pyo3(signature = (cardinality = 2, cap = DEFAULT_EXACT_CAP))]
    fn label<'py>(
        &self,
        py: Python<'py>,
        cardinality: usize,
        cap: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = sparing::sparing_exact_with_cap(&self.inner, cap).map_err(value_err)?;
        let nonmono: BTreeSet<_> = r.witness_nonmono.iter().copied().collect();
        let cards: BTreeMap<_, _> = nonmono.iter().map(|&v| (v, cardinality)).collect();
        let f = labeling::construct_weak(&self.inner, &nonmono, &cards).map_err(value_err)?;
        let report = labeling::verify(&self.inner, &f).map_err(value_err)?;
        if !report.is_wiasi || report.mono_edge_count != r.value {
            return Err(value_err("constructed labeling failed verification"));
        }
        self.labeling_dict(py, &f)
    }

    /// Weakly k-uniform labeling of a bipartite graph.
    fn label_uniform<'py>(&self, py: Python<'py>, k: usize) -> PyResult<Bound<'py, PyDict>> {
        let f = labeling::construct_k_uniform(&self.inner, k).map_err(value_err)?;
        self.labeling_dict(py, &f)
    }

    /// Full verification report for a name -> elements labeling dict.
    fn verify<'py>(
        &self,
        py: Python<'py>,
        labels: BTreeMap<String, Vec<u64>>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let f = self.labeling_from(labels)?;
        let report = labeling::verify(&self.inner, &f).map_err(value_err)?;
        self.report_dict(py, &report)
    }

    fn to_edge_list(&self) -> String {
        io::write_edge_list(&self.inner)
    }

    fn to_json(&self) -> String {
        io::write_graph_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        io::write_dot(&self.inner, "setlab")
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

/// Sumset {a+b : a in xs, b in ys} of two non-empty integer sets.
#[pyfunction]
fn sumset(xs: Vec<u64>, ys: Vec<u64>) -> PyResult<Vec<u64>> {
    let a = IntSet::new(xs).ok_or_else(|| value_err("first set is empty"))?;
    let b = IntSet::new(ys).ok_or_else(|| value_err("second set is empty"))?;
    Ok(a.sumset(&b).elements().to_vec())
}

/// Registered claim ids in registry order.
#[pyfunction]
fn claim_ids() -> Vec<String> {
    claims::registry().iter().map(|c| c.id.to_string()).collect()
}

/// Run the whole claims catalog; returns {claim id: verdict}.
#[pyfunction]
fn claim_verdicts() -> BTreeMap<String, String> {
    claims::status_table().verdicts()
}

/// Full claims status table as a JSON document.
#[pyfunction]
fn claims_status_json() -> String {
    claims::status_table().to_json()
}

#[pymodule]
fn setlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(sumset, m)?)?;
    m.add_function(wrap_pyfunction!(claim_ids, m)?)?;
    m.add_function(wrap_pyfunction!(claim_verdicts, m)?)?;
    m.add_function(wrap_pyfunction!(claims_status_json, m)?)?;
    m.add("DEFAULT_EXACT_CAP", DEFAULT_EXACT_CAP)?;
    Ok(())
}
