//! Python module `ecc_spectra_py`.
//!
//! Results cross the boundary as JSON and are decoded with the `json` module,
//! so every function returns plain lists, dicts and numbers.

use std::collections::BTreeMap;

use ecc_spectra::spectral::{char_poly, sym_eigenvalues_int};
use ecc_spectra::verify::{self, Params, SweepConfig, DEFAULT_TOL};
use ecc_spectra::{ecc_matrix as build_ecc, parse_graph, Graph, Spectrum};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn decode<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn graph(expr: &str) -> PyResult<Graph> {
    parse_graph(expr).map_err(err)
}

fn params(given: Option<BTreeMap<String, Bound<'_, PyAny>>>) -> PyResult<Params> {
    let mut p = Params::new();
    for (k, v) in given.unwrap_or_default() {
        p.set(&k, &v.str()?.to_string());
    }
    Ok(p)
}

/// Eccentricity matrix of the graph expression as a list of rows.
#[pyfunction]
fn ecc_matrix(expr: &str) -> PyResult<Vec<Vec<i64>>> {
    Ok(build_ecc(&graph(expr)?).map_err(err)?.rows())
}

/// Eigenvalues with multiplicities, energy, spectral radius, least eigenvalue and inertia.
#[pyfunction]
fn spectrum<'py>(py: Python<'py>, expr: &str) -> PyResult<Bound<'py, PyAny>> {
    let eps = build_ecc(&graph(expr)?).map_err(err)?;
    let values = sym_eigenvalues_int(eps.as_int_matrix()).map_err(err)?;
    let report = Spectrum::from_values(&values).report();
    decode(py, &serde_json::to_string(&report).map_err(err)?)
}

/// Characteristic polynomial coefficients, lowest degree first.
#[pyfunction]
fn charpoly<'py>(py: Python<'py>, expr: &str) -> PyResult<Bound<'py, PyAny>> {
    let eps = build_ecc(&graph(expr)?).map_err(err)?;
    let p = char_poly(eps.as_int_matrix());
    decode(py, &p.to_json()["coeffs"].to_string())
}

/// Theorem ids in registry order.
#[pyfunction]
fn theorems() -> Vec<&'static str> {
    verify::theorems().iter().map(|t| t.id).collect()
}

/// Closed-form predictions for every case of a sweep.
#[pyfunction]
#[pyo3(signature = (theorem, params=None, seed=0))]
fn closed<'py>(
    py: Python<'py>,
    theorem: &str,
    params: Option<BTreeMap<String, Bound<'py, PyAny>>>,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let p = self::params(params)?;
    let rows: Vec<serde_json::Value> = verify::closed_forms(theorem, &p, seed)
        .map_err(err)?
        .into_iter()
        .map(|(tuple, res)| {
            let mut v = res.to_json();
            v["params"] = serde_json::to_value(&tuple).unwrap_or_default();
            v
        })
        .collect();
    decode(py, &serde_json::Value::from(rows).to_string())
}

/// Verification reports for a sweep, one dict per case.
#[pyfunction]
#[pyo3(signature = (theorem, params=None, seed=0, tol=DEFAULT_TOL))]
fn verify_theorem<'py>(
    py: Python<'py>,
    theorem: &str,
    params: Option<BTreeMap<String, Bound<'py, PyAny>>>,
    seed: u64,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = SweepConfig { tol, seed, ..SweepConfig::default() };
    let p = self::params(params)?;
    let reports = py.detach(|| verify::run_sweep(theorem, &p, &cfg)).map_err(err)?;
    let lines: Vec<String> = reports.iter().map(|r| r.to_json_line()).collect();
    decode(py, &format!("[{}]", lines.join(",")))
}

#[pymodule]
fn ecc_spectra_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(ecc_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(theorems, m)?)?;
    m.add_function(wrap_pyfunction!(closed, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    Ok(())
}
