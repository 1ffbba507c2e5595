//! Python bindings: `facering.Complex` plus `classify`, `analyze` and `hprime`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use facering::analysis::{bruteforce_hprime, hprime_prediction, Invariants, Mode};
use facering::formulas::Method;
use facering::report::{self, ReportOptions};
use facering::{FieldSpec, SimplicialComplex};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(spec: &str) -> PyResult<FieldSpec> {
    spec.parse().map_err(err)
}

#[pyclass(name = "Complex", module = "facering", frozen)]
pub struct Complex {
    inner: SimplicialComplex,
}

#[pymethods]
impl Complex {
    /// Parses `.cplx` text: one facet per line, `#` comments.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: SimplicialComplex::parse(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn bundled(name: &str) -> PyResult<Self> {
        Ok(Self {
            inner: facering::data::load(name).map_err(err)?,
        })
    }

    #[staticmethod]
    fn bundled_names() -> Vec<&'static str> {
        facering::data::list().iter().map(|d| d.name).collect()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    fn facets(&self) -> Vec<Vec<String>> {
        self.inner.label_facets()
    }

    fn f_vector(&self) -> Vec<u64> {
        self.inner.f_vector().as_slice().to_vec()
    }

    fn h_vector(&self) -> Vec<i64> {
        self.inner.h_vector().as_slice().to_vec()
    }

    fn reduced_euler_char(&self) -> i64 {
        self.inner.reduced_euler_char()
    }

    #[pyo3(signature = (field = "p:2147483647"))]
    fn betti(&self, field: &str) -> PyResult<Vec<usize>> {
        let spec = self::field(field)?;
        Ok(facering::with_field!(spec, f => facering::homology::reduced_betti(&f, &self.inner)).values)
    }

    fn link(&self, face: Vec<String>) -> PyResult<Self> {
        let f = self.inner.face_from_labels(&face).map_err(err)?;
        Ok(Self {
            inner: self.inner.link(&f).map_err(err)?,
        })
    }

    fn subdivide(&self, face: Vec<String>) -> PyResult<Self> {
        let f = self.inner.face_from_labels(&face).map_err(err)?;
        Ok(Self {
            inner: self.inner.stellar_subdivision(&f).map_err(err)?,
        })
    }

    fn to_cplx(&self) -> String {
        self.inner.to_cplx_string()
    }

    fn __repr__(&self) -> String {
        format!("Complex(n={}, d={}, facets={})", self.inner.n(), self.inner.d(), self.inner.facets().len())
    }
}

/// Classification flags as a JSON string.
#[pyfunction]
#[pyo3(signature = (complex, field = "p:2147483647"))]
fn classify(complex: &Complex, field: &str) -> PyResult<String> {
    let r = facering::classify::classify(&complex.inner, self::field(field)?);
    serde_json::to_string(&r).map_err(err)
}

/// The full report as a JSON string.
#[pyfunction]
#[pyo3(signature = (complex, field = "p:2147483647", seed = 0, trials = 3, force = false, id = "complex"))]
fn analyze(complex: &Complex, field: &str, seed: u64, trials: usize, force: bool, id: &str) -> PyResult<String> {
    let opts = ReportOptions {
        field: self::field(field)?,
        seed,
        trials,
        mode: if force { Mode::Force } else { Mode::Enforce },
    };
    report::analyze(id, &complex.inner, &opts)
        .and_then(|r| r.to_json())
        .map_err(err)
}

/// `h'` by brute force, or predicted by `method`.
#[pyfunction]
#[pyo3(signature = (complex, method = "bruteforce", field = "p:2147483647", seed = 0, trials = 3, force = false))]
fn hprime(complex: &Complex, method: &str, field: &str, seed: u64, trials: usize, force: bool) -> PyResult<Vec<i64>> {
    let spec = self::field(field)?;
    let method: Method = method.parse().map_err(err)?;
    let mode = if force { Mode::Force } else { Mode::Enforce };
    let inv = Invariants::compute(&complex.inner, spec, seed);
    match hprime_prediction(&inv, method, mode) {
        Some(p) => Ok(p.map_err(err)?.values),
        None => {
            let b = bruteforce_hprime(&complex.inner, spec, seed, trials).map_err(err)?;
            Ok(b.values.iter().map(|&x| x as i64).collect())
        }
    }
}

#[pymodule(name = "facering")]
fn facering_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Complex>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(hprime, m)?)?;
    Ok(())
}
