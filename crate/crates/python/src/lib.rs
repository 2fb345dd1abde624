//! Python bindings. The module is importable as `halfturn_ice`.
//!
//! Exact values cross the boundary as Python ints (counts), strings
//! (elements of Q(ζ), written like `1/2 + 3/4*zeta`) or wrapped objects
//! (`Poly`, `Asm`, `Report`). Structured results come back as plain dicts.

use std::collections::HashMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use serde_json::Value;

use halfturn_ice::asm::{self, Asm};
use halfturn_ice::determinant::{self, SpecialModel, UVector};
use halfturn_ice::enumerate::{self, AsmClass, GenfuncMode};
use halfturn_ice::formulas::{self, EnumFamily, RefinedFamily, RefinedOptions};
use halfturn_ice::icemodel::{self, IceConfig, ModelKind, ModelSpec};
use halfturn_ice::verify::{self, SuiteParams, VerificationReport};
use halfturn_ice::{CycloNum, IntPoly, VarAssignment};

fn err(e: halfturn_ice::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = halfturn_ice::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn assignment(at: HashMap<String, String>) -> PyResult<VarAssignment<CycloNum>> {
    let mut out = VarAssignment::new();
    for (k, v) in at {
        out.insert(k, parse::<CycloNum>(&v)?);
    }
    Ok(out)
}

fn uvector(u: Vec<String>) -> PyResult<UVector> {
    let coords = u.iter().map(|s| parse::<CycloNum>(s)).collect::<PyResult<Vec<_>>>()?;
    UVector::new(coords).map_err(err)
}

fn spec_of(model: &str, size: usize, modified: bool) -> PyResult<ModelSpec> {
    let spec = match parse::<ModelKind>(model)? {
        ModelKind::Dwbc => ModelSpec::dwbc(size),
        ModelKind::HtEven => ModelSpec::ht_even(size),
        ModelKind::HtOdd => ModelSpec::ht_odd(size),
    };
    Ok(if modified { spec.modified() } else { spec })
}

/// Laurent polynomial with integer coefficients.
#[pyclass(frozen, eq, skip_from_py_object, name = "Poly", module = "halfturn_ice")]
#[derive(Clone, PartialEq)]
struct Poly(IntPoly);

#[pymethods]
impl Poly {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Poly> {
        let v: Value = serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))?;
        IntPoly::from_json(&v).map(Poly).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.0.vars().to_vec()
    }

    fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    /// `[(exponents by variable, coefficient), ...]` in the internal order.
    fn terms(&self) -> Vec<(HashMap<String, i32>, BigInt)> {
        self.0
            .terms()
            .map(|(m, c)| {
                let exps = self.0.vars().iter().map(|v| (v.clone(), self.0.exponent_of(m, v))).filter(|(_, e)| *e != 0);
                (exps.collect(), c.clone())
            })
            .collect()
    }

    /// Coefficient of the given partial monomial, as a polynomial in the
    /// remaining variables.
    fn coeff(&self, exps: HashMap<String, i32>) -> Poly {
        let c: Vec<(&str, i32)> = exps.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        Poly(self.0.coeff(&c))
    }

    /// Exact value at a full assignment; every variable must be given.
    fn evaluate(&self, at: HashMap<String, String>) -> PyResult<String> {
        icemodel::eval_int(&self.0, &assignment(at)?).map(|v| v.to_string()).map_err(err)
    }

    fn __add__(&self, other: &Poly) -> Poly {
        Poly(self.0.add(&other.0))
    }

    fn __sub__(&self, other: &Poly) -> Poly {
        Poly(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: &Poly) -> Poly {
        Poly(self.0.mul(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.0)
    }
}

/// Alternating-sign matrix.
#[pyclass(frozen, eq, skip_from_py_object, name = "Asm", module = "halfturn_ice")]
#[derive(Clone, PartialEq)]
struct PyAsm(Asm);

#[pymethods]
impl PyAsm {
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<PyAsm> {
        Asm::validate(&rows).map(PyAsm).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn rows(&self) -> Vec<Vec<i8>> {
        self.0.rows()
    }

    fn half_turn(&self) -> PyAsm {
        PyAsm(self.0.half_turn())
    }

    fn is_half_turn_symmetric(&self) -> bool {
        self.0.is_half_turn_symmetric()
    }

    fn minus_ones(&self) -> usize {
        self.0.minus_ones()
    }

    /// 1-based row of the 1 in the first column.
    fn first_column_one_pos(&self) -> usize {
        self.0.first_column_one_pos()
    }

    fn central_entry(&self) -> Option<i8> {
        self.0.central_entry()
    }

    /// One-line form when the matrix is a permutation matrix.
    fn permutation(&self) -> Option<Vec<usize>> {
        self.0.permutation()
    }

    fn inversions(&self) -> Option<usize> {
        self.0.permutation().map(|p| asm::inversions(&p))
    }

    /// Counts of the six vertex types of the corresponding ice state.
    fn vertex_counts(&self) -> [usize; 6] {
        self.0.to_state().counts()
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Asm({:?})", self.0.rows())
    }
}

/// Outcome of one verification suite.
#[pyclass(frozen, name = "Report", module = "halfturn_ice")]
struct Report(VerificationReport);

#[pymethods]
impl Report {
    #[getter]
    fn suite_id(&self) -> &str {
        &self.0.suite_id
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn checks_run(&self) -> u64 {
        self.0.checks_run
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    #[getter]
    fn witness<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.0.witness.as_ref().map(|w| to_py(py, w)).transpose()
    }

    #[getter]
    fn elapsed_ms(&self) -> u128 {
        self.0.elapsed.as_millis()
    }

    /// The report as one JSON line (without timing).
    fn to_json(&self) -> String {
        self.0.to_json_line(false)
    }

    fn __repr__(&self) -> String {
        format!(
            "Report({}, {}, {} checks)",
            self.0.suite_id,
            if self.0.passed() { "pass" } else { "fail" },
            self.0.checks_run
        )
    }
}

/// Every ASM of order `n` in the class (`"all"` or `"ht"`).
#[pyfunction]
#[pyo3(signature = (n, cls = "all"))]
fn enumerate_asms(n: usize, cls: &str) -> PyResult<Vec<PyAsm>> {
    let all = enumerate::gen_asms(n, parse::<AsmClass>(cls)?).map_err(err)?;
    Ok(all.into_iter().map(PyAsm).collect())
}

#[pyfunction]
#[pyo3(signature = (n, cls = "all"))]
fn count_asms(n: usize, cls: &str) -> PyResult<u64> {
    enumerate::count_asms(n, parse::<AsmClass>(cls)?).map_err(err)
}

/// Refined census table as a dict.
#[pyfunction]
#[pyo3(signature = (n, cls = "all"))]
fn census<'py>(py: Python<'py>, n: usize, cls: &str) -> PyResult<Bound<'py, PyAny>> {
    let table = enumerate::census(n, parse::<AsmClass>(cls)?).map_err(err)?;
    to_py(py, &table.to_json())
}

/// Inversion generating function in `z` over the permutation matrices of
/// the class, from the product form or by enumeration.
#[pyfunction]
#[pyo3(signature = (n, cls = "all", brute = false))]
fn inversion_genfunc(n: usize, cls: &str, brute: bool) -> PyResult<Poly> {
    let mode = if brute { GenfuncMode::Brute } else { GenfuncMode::Closed };
    enumerate::inversion_genfunc(n, parse::<AsmClass>(cls)?, mode).map(Poly).map_err(err)
}

/// Symbolic partition function. `model` is `dwbc`, `ht-even` or `ht-odd`;
/// `size` is the order for `dwbc` and the half-size `m` otherwise.
#[pyfunction]
#[pyo3(signature = (model, size, modified = false, max_states = None))]
fn partition_function(model: &str, size: usize, modified: bool, max_states: Option<u128>) -> PyResult<Poly> {
    let spec = spec_of(model, size, modified)?;
    let cfg = max_states.map_or_else(IceConfig::default, |max_states| IceConfig { max_states });
    icemodel::symbolic_z_with(&spec, &cfg).map(Poly).map_err(err)
}

/// Partition function evaluated exactly in Q(ζ). The assignment must give
/// `a` and every spectral variable (`x1.., y1..`).
#[pyfunction]
#[pyo3(signature = (model, size, at, modified = false))]
fn evaluate_partition(model: &str, size: usize, at: HashMap<String, String>, modified: bool) -> PyResult<String> {
    let spec = spec_of(model, size, modified)?;
    let r = icemodel::partition_function(&spec, Some(&assignment(at)?), &IceConfig::default()).map_err(err)?;
    Ok(r.evaluated().expect("evaluated result").to_string())
}

/// Determinant form at `a = ζ` for `model` in `dwbc`, `ht-even`, `ht-odd`.
#[pyfunction]
fn special_determinant(model: &str, size: usize, u: Vec<String>) -> PyResult<String> {
    determinant::special_z(parse::<SpecialModel>(model)?, size, &uvector(u)?)
        .map(|v| v.to_string())
        .map_err(err)
}

/// `(determinant, state sum)` at the same point.
#[pyfunction]
fn compare_determinant(model: &str, size: usize, u: Vec<String>) -> PyResult<(String, String)> {
    let (d, z) = determinant::compare_at(parse::<SpecialModel>(model)?, size, &uvector(u)?, &IceConfig::default())
        .map_err(err)?;
    Ok((d.to_string(), z.to_string()))
}

/// Closed-form count for a family (`asm`, `ht-even`, `ht-odd`,
/// `ht-odd-plus`, `ht-odd-minus`, `robbins`).
#[pyfunction]
fn count_closed(family: &str, order: usize) -> PyResult<BigInt> {
    formulas::count_closed(parse::<EnumFamily>(family)?, order).map_err(err)
}

/// `A(n, r)` for `r = 1..n` from the closed form.
#[pyfunction]
fn refined_asm_counts(n: usize) -> PyResult<Vec<BigInt>> {
    let opts = RefinedOptions { base_case: true, ..RefinedOptions::default() };
    let p = formulas::refined_closed(RefinedFamily::Asm, n, opts).map_err(err)?;
    Ok(formulas::t_coefficients(&p))
}

#[pyfunction]
fn suite_ids() -> Vec<&'static str> {
    verify::suite_ids()
}

#[pyfunction]
#[pyo3(signature = (suite_id, seed = verify::DEFAULT_SEED, n_max = None, m_max = None, points = None))]
fn run_suite(
    py: Python<'_>,
    suite_id: &str,
    seed: u64,
    n_max: Option<usize>,
    m_max: Option<usize>,
    points: Option<usize>,
) -> PyResult<Report> {
    let params = SuiteParams { n_max, m_max, points, seed, ..SuiteParams::default() };
    if !verify::suite_ids().contains(&suite_id) {
        return Err(PyKeyError::new_err(format!("unknown suite {suite_id:?}")));
    }
    py.detach(|| verify::run_suite(suite_id, &params)).map(Report).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (seed = verify::DEFAULT_SEED))]
fn run_all(py: Python<'_>, seed: u64) -> Vec<Report> {
    let params = SuiteParams::with_seed(seed);
    py.detach(|| verify::run_all(&params)).into_iter().map(Report).collect()
}

#[pymodule]
#[pyo3(name = "halfturn_ice")]
fn halfturn_ice_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SCHEMA_VERSION", verify::SCHEMA_VERSION)?;
    m.add_class::<Poly>()?;
    m.add_class::<PyAsm>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(enumerate_asms, m)?)?;
    m.add_function(wrap_pyfunction!(count_asms, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(inversion_genfunc, m)?)?;
    m.add_function(wrap_pyfunction!(partition_function, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_partition, m)?)?;
    m.add_function(wrap_pyfunction!(special_determinant, m)?)?;
    m.add_function(wrap_pyfunction!(compare_determinant, m)?)?;
    m.add_function(wrap_pyfunction!(count_closed, m)?)?;
    m.add_function(wrap_pyfunction!(refined_asm_counts, m)?)?;
    m.add_function(wrap_pyfunction!(suite_ids, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(run_all, m)?)?;
    Ok(())
}
