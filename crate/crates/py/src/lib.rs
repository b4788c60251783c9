//! Python bindings. Reports come back as plain dicts with the same keys and
//! nesting as the CLI's `--machine` output.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};
use pyo3::IntoPyObjectExt;

use pomkit::actions::{h_build, roundtrip_gh, roundtrip_hg, validate_action};
use pomkit::builtin;
use pomkit::enumeration;
use pomkit::format::{self, BlockData};
use pomkit::pom;
use pomkit::report::{self, Report, Value};
use pomkit::{FiniteMonoid, Preorder, Submonoid};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn value<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    match v {
        Value::Null => Ok(py.None().into_bound(py)),
        Value::Bool(b) => b.into_bound_py_any(py),
        Value::Int(i) => i.into_bound_py_any(py),
        Value::Text(s) => s.into_bound_py_any(py),
        Value::Set(s) | Value::Row(s) | Value::Carrier { members: s, .. } => s.into_bound_py_any(py),
        Value::Edges(e) => e.into_bound_py_any(py),
        Value::List(items) => {
            let list = PyList::empty(py);
            for i in items {
                list.append(value(py, i)?)?;
            }
            list.into_bound_py_any(py)
        }
        Value::Map(r) => dict(py, r).map(Bound::into_any),
        Value::Table(t) => {
            let list = PyList::empty(py);
            for row in &t.rows {
                let d = PyDict::new(py);
                for ((key, _), cell) in t.columns.iter().zip(row) {
                    d.set_item(key, value(py, cell)?)?;
                }
                list.append(d)?;
            }
            list.into_bound_py_any(py)
        }
    }
}

fn dict<'py>(py: Python<'py>, r: &Report) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (k, v) in &r.entries {
        d.set_item(k, value(py, v)?)?;
    }
    Ok(d)
}

/// A finite monoid given by its Cayley table.
#[pyclass(name = "Monoid", module = "pomkit", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMonoid(FiniteMonoid);

#[pymethods]
impl PyMonoid {
    #[new]
    #[pyo3(signature = (table, identity = 0))]
    fn new(table: Vec<Vec<usize>>, identity: usize) -> PyResult<Self> {
        FiniteMonoid::new(table, identity).map(PyMonoid).map_err(err)
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn identity(&self) -> usize {
        self.0.identity()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<usize>> {
        self.0.rows()
    }

    fn op(&self, a: usize, b: usize) -> PyResult<usize> {
        self.0.check_element(a).and(self.0.check_element(b)).map_err(err)?;
        Ok(self.0.op(a, b))
    }

    fn is_commutative(&self) -> bool {
        self.0.is_commutative()
    }

    /// Coset table of a submonoid (default: the whole monoid).
    #[pyo3(signature = (submonoid = None))]
    fn cosets<'py>(&self, py: Python<'py>, submonoid: Option<Vec<usize>>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.sub(submonoid)?;
        dict(py, &report::cosets_report(&self.0, &s))
    }

    fn normality<'py>(&self, py: Python<'py>, submonoid: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.sub(Some(submonoid))?;
        dict(py, &report::normality_report(&self.0, &s))
    }

    /// Non-reflexive pairs of the preorder induced by a submonoid.
    #[pyo3(signature = (submonoid, side = "right"))]
    fn induced(&self, submonoid: Vec<usize>, side: &str) -> PyResult<Vec<(usize, usize)>> {
        let s = self.sub(Some(submonoid))?;
        match side {
            "right" => Ok(pom::induced_right(&self.0, &s).strict_pairs()),
            "left" => Ok(pom::induced_left(&self.0, &s).strict_pairs()),
            _ => Err(err(format!("side must be `right` or `left`, not `{side}`"))),
        }
    }

    /// Submonoids, optionally only `right_normal`, `left_normal` or `normal` ones.
    #[pyo3(signature = (filter = None))]
    fn submonoids(&self, filter: Option<&str>) -> PyResult<Vec<Vec<usize>>> {
        let f = filter.unwrap_or("none").parse().map_err(err)?;
        let subs = enumeration::enumerate_submonoids(&self.0, f).map_err(err)?;
        Ok(subs.iter().map(|s| s.members().to_vec()).collect())
    }

    /// Every compatible preorder, as lists of non-reflexive pairs.
    fn compatible_preorders(&self) -> PyResult<Vec<Vec<(usize, usize)>>> {
        let all = enumeration::enumerate_compatible_preorders(&self.0).map_err(err)?;
        Ok(all.iter().map(Preorder::strict_pairs).collect())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Monoid({:?}, identity={})", self.0.rows(), self.0.identity())
    }
}

impl PyMonoid {
    fn sub(&self, members: Option<Vec<usize>>) -> PyResult<Submonoid> {
        match members {
            None => Ok(Submonoid::full(&self.0)),
            Some(m) => Submonoid::new(&self.0, m).map_err(err),
        }
    }
}

/// A monoid with a compatible preorder.
#[pyclass(name = "PreorderedMonoid", module = "pomkit", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPom(pom::PreorderedMonoid);

#[pymethods]
impl PyPom {
    /// `edges` are pairs `(a, b)` meaning `a <= b`; the closure is taken.
    #[new]
    fn new(monoid: &PyMonoid, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let order = Preorder::closure_from_edges(monoid.0.size(), &edges).map_err(err)?;
        pom::PreorderedMonoid::new(monoid.0.clone(), order).map(PyPom).map_err(err)
    }

    #[getter]
    fn monoid(&self) -> PyMonoid {
        PyMonoid(self.0.monoid().clone())
    }

    #[getter]
    fn order(&self) -> Vec<(usize, usize)> {
        self.0.order().strict_pairs()
    }

    #[getter]
    fn cone(&self) -> Vec<usize> {
        self.0.cone().members().to_vec()
    }

    fn le(&self, a: usize, b: usize) -> bool {
        a < self.0.size() && b < self.0.size() && self.0.order().le(a, b)
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = pom::classify(&self.0);
        dict(py, &report::classify_report(self.0.order(), self.0.monoid(), &c))
    }

    /// Same carrier with the cone-induced preorder; fails unless the cone
    /// is right normal.
    fn coreflect(&self) -> PyResult<Self> {
        pom::coreflect(&self.0).map(|(core, _)| PyPom(core)).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("PreorderedMonoid(size={}, order={:?})", self.0.size(), self.0.order().strict_pairs())
    }
}

/// A parsed algebra file.
#[pyclass(name = "Document", module = "pomkit", frozen)]
struct PyDocument(format::Document);

#[pymethods]
impl PyDocument {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        format::parse(text).map(PyDocument).map_err(err)
    }

    /// A bundled example by name.
    #[staticmethod]
    fn example(name: &str) -> PyResult<Self> {
        let src = builtin::source(name).ok_or_else(|| err(format!("no bundled example `{name}`")))?;
        Self::parse(src)
    }

    /// `(name, kind)` for each block in file order.
    fn blocks(&self) -> Vec<(String, &'static str)> {
        self.0.blocks.iter().map(|b| (b.name.clone(), b.data.kind())).collect()
    }

    fn monoid(&self, name: &str) -> PyResult<PyMonoid> {
        self.0.monoid(name).cloned().map(PyMonoid).ok_or_else(|| err(format!("no monoid `{name}`")))
    }

    fn pom(&self, name: &str) -> PyResult<PyPom> {
        self.0.pom(name).cloned().map(PyPom).ok_or_else(|| err(format!("no pom `{name}`")))
    }

    /// Axioms, the built semidirect extension and both round trips for an
    /// action block.
    fn check_action<'py>(&self, py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyDict>> {
        let Some(BlockData::Action { action, .. }) = self.0.get(name).map(|b| &b.data) else {
            return Err(err(format!("no action `{name}`")));
        };
        let r = Report::new().with("axioms", report::action_report(&validate_action(action)));
        let r = match h_build(action) {
            Ok(cext) => r
                .with("semidirect_size", cext.ext().a().size())
                .with("cone", Value::Set(cext.pa().members().to_vec()))
                .with("roundtrip_gh", report::gh_report(&roundtrip_gh(action).map_err(err)?))
                .with("roundtrip_hg", report::hg_report(&roundtrip_hg(&cext))),
            Err(e) => r.with("build_error", e.to_string()),
        };
        dict(py, &r)
    }

    fn serialize(&self) -> String {
        format::serialize(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.blocks.len()
    }
}

/// Names and summaries of the bundled examples.
#[pyfunction]
fn examples<'py>(py: Python<'py>) -> PyResult<Vec<Bound<'py, PyTuple>>> {
    builtin::EXAMPLES.iter().map(|e| PyTuple::new(py, [e.name, e.summary])).collect()
}

#[pyfunction]
fn enumerate_monoids(n: usize) -> PyResult<Vec<PyMonoid>> {
    Ok(enumeration::enumerate_monoids(n).map_err(err)?.into_iter().map(PyMonoid).collect())
}

#[pyfunction]
#[pyo3(signature = (window = 10))]
fn demo_zz(py: Python<'_>, window: u32) -> PyResult<Bound<'_, PyDict>> {
    dict(py, &report::zz_report(&pomkit::zz::zz_demo(window)))
}

#[pymodule]
#[pyo3(name = "pomkit")]
fn pomkit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonoid>()?;
    m.add_class::<PyPom>()?;
    m.add_class::<PyDocument>()?;
    m.add_function(wrap_pyfunction!(examples, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_monoids, m)?)?;
    m.add_function(wrap_pyfunction!(demo_zz, m)?)?;
    Ok(())
}
