//! Python module `lch`.

use std::collections::BTreeMap;

use lch_core::augcat::{hom_cohomology, hom_complex, Variant};
use lch_core::augment::{enumerate_augmentations, lch_poincare, lch_spectrum, Augmentation};
use lch_core::diagram::{parse_front, resolve, rotation, tb, FrontDiagram};
use lch_core::dga::{build_dga, check_dga};
use lch_core::obstruct::CobordismHypothesis;
use lch_core::{library, rulings};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: lch_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A validated single-component front.
#[pyclass(name = "Front", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFront(FrontDiagram);

#[pymethods]
impl PyFront {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_front(text).map(PyFront).map_err(err)
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        library::builtin(name).map(PyFront).map_err(err)
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    fn tb(&self) -> i64 {
        tb(&self.0)
    }

    fn rotation(&self) -> i64 {
        rotation(&self.0)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn ruling_polynomial(&self) -> PyResult<BTreeMap<i64, i64>> {
        Ok(rulings::ruling_polynomial(&self.0).map_err(err)?.terms().collect())
    }

    fn ruling_count(&self, graded: Option<bool>) -> PyResult<usize> {
        let rs = if graded.unwrap_or(true) {
            rulings::enumerate_rulings(&self.0)
        } else {
            rulings::enumerate_ungraded_rulings(&self.0)
        };
        Ok(rs.map_err(err)?.len())
    }

    /// Exact value as a string such as `"1/2"`.
    fn homotopy_cardinality(&self, q: u32) -> PyResult<String> {
        Ok(rulings::homotopy_cardinality(&self.0, q).map_err(err)?.to_string())
    }

    fn __repr__(&self) -> String {
        format!("Front({:?}, tb={})", self.0.name(), tb(&self.0))
    }
}

/// The Chekanov–Eliashberg DGA over `F_q`.
#[pyclass(name = "Dga", frozen)]
struct PyDga(lch_core::dga::Dga);

#[pymethods]
impl PyDga {
    #[new]
    #[pyo3(signature = (front, q = 2))]
    fn new(front: &PyFront, q: u32) -> PyResult<Self> {
        let rd = resolve(&front.0).map_err(err)?;
        build_dga(&rd, q).map(PyDga).map_err(err)
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.field().order()
    }

    fn generators(&self) -> Vec<(String, i64)> {
        self.0.generators().iter().map(|g| (g.id.clone(), g.degree)).collect()
    }

    fn differential(&self, id: &str) -> PyResult<String> {
        let g = self
            .0
            .generators()
            .iter()
            .position(|g| g.id == id)
            .ok_or_else(|| PyValueError::new_err(format!("no generator {id}")))?;
        Ok(self.0.display_poly(self.0.differential(g)))
    }

    /// `True` when ∂² = 0, ∂ has degree −1 and the Euler count equals tb.
    fn check(&self) -> bool {
        check_dga(&self.0).passed()
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    /// Each augmentation as `(ε(t), [ε(chord) ...])`.
    fn augmentations(&self) -> PyResult<Vec<(u32, Vec<u32>)>> {
        let augs = enumerate_augmentations(&self.0).map_err(err)?;
        Ok(augs.iter().map(|e| (e.t().value(), e.values().iter().map(|v| v.value()).collect())).collect())
    }

    /// Poincaré polynomials as `{degree: dimension}`, one per distinct value.
    fn lch_spectrum(&self) -> PyResult<Vec<BTreeMap<i64, i64>>> {
        Ok(lch_spectrum(&self.0).map_err(err)?.iter().map(|p| p.terms().collect()).collect())
    }

    fn lch_poincare(&self, index: usize) -> PyResult<BTreeMap<i64, i64>> {
        let e = self.augmentation(index)?;
        Ok(lch_poincare(&self.0, &e).map_err(err)?.terms().collect())
    }

    /// `{k: dim H^k}` of `Hom₊` or `Hom₋` between augmentations `i` and `j`.
    #[pyo3(signature = (i, j, variant = "plus"))]
    fn hom_cohomology(&self, i: usize, j: usize, variant: &str) -> PyResult<BTreeMap<i64, usize>> {
        let v = match variant {
            "plus" => Variant::Plus,
            "minus" => Variant::Minus,
            other => return Err(PyValueError::new_err(format!("variant must be plus or minus, got {other}"))),
        };
        let (a, b) = (self.augmentation(i)?, self.augmentation(j)?);
        Ok(hom_cohomology(&hom_complex(&self.0, &a, &b, v).map_err(err)?))
    }
}

impl PyDga {
    fn augmentation(&self, index: usize) -> PyResult<Augmentation> {
        let augs = enumerate_augmentations(&self.0).map_err(err)?;
        augs.get(index).cloned().ok_or_else(|| PyValueError::new_err(format!("augmentation {index} out of range")))
    }
}

/// Runs the obstruction tests; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (minus, plus, chi, qs = vec![2]))]
fn obstruct<'py>(py: Python<'py>, minus: &PyFront, plus: &PyFront, chi: i64, qs: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
    let h = CobordismHypothesis::new(minus.0.clone(), plus.0.clone(), chi, qs).map_err(err)?;
    to_py(py, &lch_core::obstruct::obstruct(&h).map_err(err)?)
}

#[pyfunction]
fn builtins() -> Vec<String> {
    library::builtins().iter().map(|(e, _)| e.name.to_string()).collect()
}

#[pymodule]
pub fn lch(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFront>()?;
    m.add_class::<PyDga>()?;
    m.add_function(wrap_pyfunction!(obstruct, m)?)?;
    m.add_function(wrap_pyfunction!(builtins, m)?)?;
    Ok(())
}
