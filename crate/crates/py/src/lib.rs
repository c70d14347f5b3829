//! Python bindings: the catalog, side construction and evaluation, and the
//! verifier. Rationals cross the boundary as `fractions.Fraction`.

use idforge_core::binomial::VecIndex;
use idforge_core::catalog::{self, Bindings, Mutation, ParamValue, SideKind, StatusFlag, StructuralParams};
use idforge_core::report::{self, RenderOptions};
use idforge_core::verifier::{self, CellOptions, GridSpec, Mode, Selector};
use idforge_core::{Assignment, Rational};
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};

pyo3::create_exception!(idforge, IdforgeError, PyException);

fn err(e: impl std::fmt::Display) -> PyErr {
    IdforgeError::new_err(e.to_string())
}

fn to_fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

/// Accepts int, str ("p/q") or anything with numerator/denominator.
fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(Rational::from(i));
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(err);
    }
    let n = obj.getattr("numerator")?.str()?.to_string();
    let d = obj.getattr("denominator")?.str()?.to_string();
    format!("{n}/{d}").parse().map_err(err)
}

fn to_param_value(obj: &Bound<'_, PyAny>) -> PyResult<ParamValue> {
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(ParamValue::Int(i));
    }
    if let Ok(v) = obj.extract::<Vec<i64>>() {
        return Ok(ParamValue::Vec(VecIndex::new(v)));
    }
    Err(err(format!("expected an int or a tuple of ints, got {obj}")))
}

fn to_params(params: Option<&Bound<'_, PyDict>>) -> PyResult<StructuralParams> {
    let mut out = StructuralParams::new();
    if let Some(d) = params {
        for (k, v) in d.iter() {
            out.set(&k.extract::<String>()?, to_param_value(&v)?);
        }
    }
    Ok(out)
}

/// Grid bindings: an int, a tuple (one vector), or a list of either.
fn to_bindings(params: Option<&Bound<'_, PyDict>>) -> PyResult<Bindings> {
    let mut out = Bindings::new();
    if let Some(d) = params {
        for (k, v) in d.iter() {
            let vals = if v.is_instance_of::<PyList>() {
                v.try_iter()?.map(|item| to_param_value(&item?)).collect::<PyResult<Vec<_>>>()?
            } else if v.is_instance_of::<PyTuple>() || v.extract::<i64>().is_ok() {
                vec![to_param_value(&v)?]
            } else {
                v.try_iter()?.map(|item| to_param_value(&item?)).collect::<PyResult<Vec<_>>>()?
            };
            out.insert(k.extract::<String>()?, vals);
        }
    }
    Ok(out)
}

fn to_point(point: &Bound<'_, PyDict>) -> PyResult<Assignment> {
    point.iter().map(|(k, v)| Ok((k.extract::<String>()?, to_rational(&v)?))).collect()
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

/// A sparse polynomial with exact rational coefficients (Laurent in `q`).
#[pyclass(name = "Polynomial", module = "idforge", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolynomial(idforge_core::Polynomial);

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPolynomial).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPolynomial(self.0.add(&other.0))
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPolynomial(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPolynomial(self.0.mul(&other.0))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn variables(&self) -> Vec<String> {
        self.0.variables()
    }

    /// Exact value at a point given as {name: int | str | Fraction}.
    fn eval<'py>(&self, py: Python<'py>, point: &Bound<'py, PyDict>) -> PyResult<Bound<'py, PyAny>> {
        let v = self.0.eval(&to_point(point)?).map_err(err)?;
        to_fraction(py, &v)
    }
}

#[pyclass(name = "VerificationResult", module = "idforge", frozen)]
struct PyVerification(verifier::VerificationResult);

#[pymethods]
impl PyVerification {
    #[getter]
    fn identity(&self) -> &str {
        &self.0.identity
    }
    #[getter]
    fn params(&self) -> String {
        self.0.params.to_string()
    }
    #[getter]
    fn mode(&self) -> String {
        self.0.mode.to_string()
    }
    #[getter]
    fn status(&self) -> String {
        self.0.status.to_string()
    }
    #[getter]
    fn lhs_monomials(&self) -> Option<usize> {
        self.0.lhs_monomials
    }
    #[getter]
    fn rhs_monomials(&self) -> Option<usize> {
        self.0.rhs_monomials
    }
    #[getter]
    fn seed(&self) -> u64 {
        self.0.seed
    }
    #[getter]
    fn elapsed_ms(&self) -> u64 {
        self.0.elapsed_ms
    }
    #[getter]
    fn difference(&self) -> Option<PyPolynomial> {
        self.0.difference.clone().map(PyPolynomial)
    }
    #[getter]
    fn witness<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyDict>>> {
        let Some(w) = &self.0.witness else { return Ok(None) };
        let d = PyDict::new(py);
        for (k, v) in w {
            d.set_item(k, to_fraction(py, v)?)?;
        }
        Ok(Some(d))
    }

    fn __repr__(&self) -> String {
        format!("VerificationResult({} {} {}: {})", self.0.identity, self.0.params, self.0.mode, self.0.status)
    }
}

/// One dict per catalog entry, in catalog order.
#[pyfunction]
fn list_identities(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    catalog::list_identities()
        .iter()
        .map(|id| {
            let d = PyDict::new(py);
            d.set_item("name", id.name)?;
            d.set_item("schema", id.schema_summary())?;
            d.set_item("vars", id.vars_summary)?;
            d.set_item("known_discrepant", id.status == StatusFlag::KnownDiscrepant)?;
            d.set_item("anchor", id.anchor)?;
            Ok(d)
        })
        .collect()
}

/// Full symbolic expansion of one side.
#[pyfunction]
#[pyo3(signature = (identity, side, params = None))]
fn build_side(identity: &str, side: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<PyPolynomial> {
    let id = catalog::find(identity).map_err(err)?;
    id.build_side(&to_params(params)?, parse::<SideKind>(side)?).map(PyPolynomial).map_err(err)
}

/// Exact value of one side at a point, without expanding it.
#[pyfunction]
#[pyo3(signature = (identity, side, params, point))]
fn eval_side<'py>(
    py: Python<'py>,
    identity: &str,
    side: &str,
    params: Option<&Bound<'py, PyDict>>,
    point: &Bound<'py, PyDict>,
) -> PyResult<Bound<'py, PyAny>> {
    let id = catalog::find(identity).map_err(err)?;
    let v = id.eval_side(&to_params(params)?, parse::<SideKind>(side)?, &to_point(point)?).map_err(err)?;
    to_fraction(py, &v)
}

/// Verifies one cell; `mutate` runs it as a negative control.
#[pyfunction]
#[pyo3(signature = (identity, params = None, mode = "symbolic", seed = 0, trials = 20, mutate = None))]
fn verify(
    py: Python<'_>,
    identity: &str,
    params: Option<&Bound<'_, PyDict>>,
    mode: &str,
    seed: u64,
    trials: usize,
    mutate: Option<&str>,
) -> PyResult<PyVerification> {
    let id = catalog::find(identity).map_err(err)?;
    let params = to_params(params)?;
    let mode: Mode = parse(mode)?;
    let mutation = mutate.map(parse::<Mutation>).transpose()?;
    let opts = CellOptions { trials, seed, ..CellOptions::default() };
    let r = py.detach(|| match mutation {
        Some(m) => verifier::negative_control(id, &params, m, mode, &opts),
        None if mode == Mode::Symbolic => verifier::verify_symbolic(id, &params),
        None => verifier::verify_numeric(id, &params, seed, trials),
    });
    r.map(PyVerification).map_err(err)
}

/// Runs a grid; `identities=None` selects the whole catalog.
#[pyfunction]
#[pyo3(signature = (identities = None, params = None, mode = "symbolic", trials = 20, seed = 0, jobs = 1, max_n = None))]
#[allow(clippy::too_many_arguments)]
fn run_suite(
    py: Python<'_>,
    identities: Option<Vec<String>>,
    params: Option<&Bound<'_, PyDict>>,
    mode: &str,
    trials: usize,
    seed: u64,
    jobs: usize,
    max_n: Option<i64>,
) -> PyResult<Vec<PyVerification>> {
    let grid = GridSpec {
        selector: identities.map_or(Selector::All, Selector::Names),
        bindings: to_bindings(params)?,
        max_n,
        mode: parse(mode)?,
        trials,
        seed,
        jobs,
        ..GridSpec::default()
    };
    let results = py.detach(|| verifier::run_suite(&grid)).map_err(err)?;
    Ok(results.into_iter().map(PyVerification).collect())
}

/// JSON report for results from `run_suite`/`verify`.
#[pyfunction]
#[pyo3(signature = (results, seed = 0, timing = false))]
fn to_json(results: Vec<PyRef<'_, PyVerification>>, seed: u64, timing: bool) -> String {
    let rs: Vec<_> = results.iter().map(|r| r.0.clone()).collect();
    report::to_json(&rs, &RenderOptions { seed, timing })
}

#[pymodule]
fn idforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("IdforgeError", m.py().get_type::<IdforgeError>())?;
    m.add("__version__", report::TOOL_VERSION)?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyVerification>()?;
    m.add_function(wrap_pyfunction!(list_identities, m)?)?;
    m.add_function(wrap_pyfunction!(build_side, m)?)?;
    m.add_function(wrap_pyfunction!(eval_side, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(to_json, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_round_trip() {
        Python::initialize();
        Python::attach(|py| {
            let half = to_fraction(py, &"1/2".parse().unwrap()).unwrap();
            assert_eq!(to_rational(&half).unwrap().to_string(), "1/2");
            let d = PyDict::new(py);
            d.set_item("n", 2).unwrap();
            d.set_item("nvec", (1, 0)).unwrap();
            assert_eq!(to_params(Some(&d)).unwrap().to_string(), "n=2,nvec=(1,0)");
            let b = PyDict::new(py);
            b.set_item("n", vec![0, 1, 2]).unwrap();
            assert_eq!(to_bindings(Some(&b)).unwrap()["n"].len(), 3);
            let n1 = PyDict::new(py);
            n1.set_item("n", 1).unwrap();
            assert_eq!(build_side("jensen", "lhs", Some(&n1)).unwrap().__str__(), "x + y + z");
        });
    }
}
