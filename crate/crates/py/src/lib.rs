//! Python bindings: the main types and operations of the bohr-radius crate.
//!
//! Build with `cargo build -p bohr-radius-py --release`; the resulting
//! cdylib imports as the `bohr_radius_py` module (see python/smoke_test.py).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use bohr_radius::equations::{BohrPolynomial, ClassSpec, ProblemVariant, RadiusProblem};
use bohr_radius::series::{Alpha, DEFAULT_EPS};
use bohr_radius::{equations, series, specfun, verify};

fn to_py_err(e: bohr_radius::Error) -> PyErr {
    if e.is_no_root() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn parse_alpha(alpha: f64) -> PyResult<Alpha> {
    Alpha::new(alpha).map_err(to_py_err)
}

fn parse_poly(coefficients: Vec<f64>) -> PyResult<BohrPolynomial> {
    BohrPolynomial::new(coefficients).map_err(to_py_err)
}

fn parse_problem(
    class: &str,
    alpha: Option<f64>,
    poly: Vec<f64>,
    variant: &str,
    m: u32,
) -> PyResult<RadiusProblem> {
    let class = match class {
        "w0h" => {
            let alpha = alpha.ok_or_else(|| {
                PyValueError::new_err("class `w0h` needs the alpha parameter")
            })?;
            ClassSpec::W0H {
                alpha: parse_alpha(alpha)?,
            }
        }
        "stable-convex" => ClassSpec::StableConvex,
        "stable-univalent" => ClassSpec::StableUnivalent,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown class `{other}`; expected w0h | stable-convex | stable-univalent"
            )))
        }
    };
    let variant = match variant {
        "majorant" => ProblemVariant::MajorantOnly,
        "power" => ProblemVariant::WithPowerTerm { m },
        "ratio" => ProblemVariant::RatioArea,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown variant `{other}`; expected majorant | power | ratio"
            )))
        }
    };
    RadiusProblem::new(class, parse_poly(poly)?, variant).map_err(to_py_err)
}

/// A series value with its rigorous truncation bound.
#[pyclass(name = "SeriesEval", get_all, frozen)]
struct PySeriesEval {
    value: f64,
    tail_bound: f64,
    terms_used: usize,
}

#[pymethods]
impl PySeriesEval {
    fn __repr__(&self) -> String {
        format!(
            "SeriesEval(value={}, tail_bound={}, terms_used={})",
            self.value, self.tail_bound, self.terms_used
        )
    }
}

impl From<series::SeriesEval> for PySeriesEval {
    fn from(e: series::SeriesEval) -> Self {
        PySeriesEval {
            value: e.value,
            tail_bound: e.tail_bound,
            terms_used: e.terms_used,
        }
    }
}

/// A computed radius with bracket and convergence diagnostics.
#[pyclass(name = "RadiusResult", get_all, frozen)]
struct PyRadiusResult {
    radius: f64,
    residual: f64,
    iterations: u32,
    converged: bool,
    bracket_lo: f64,
    bracket_hi: f64,
}

#[pymethods]
impl PyRadiusResult {
    fn __repr__(&self) -> String {
        format!(
            "RadiusResult(radius={}, residual={}, iterations={}, converged={})",
            self.radius, self.residual, self.iterations, self.converged
        )
    }
}

impl From<bohr_radius::RadiusResult> for PyRadiusResult {
    fn from(r: bohr_radius::RadiusResult) -> Self {
        PyRadiusResult {
            radius: r.radius,
            residual: r.residual,
            iterations: r.iterations,
            converged: r.converged,
            bracket_lo: r.bracket.lo,
            bracket_hi: r.bracket.hi,
        }
    }
}

/// Summary of one inequality sweep.
#[pyclass(name = "VerificationSummary", get_all, frozen)]
struct PyVerificationSummary {
    verdict: String,
    radius: Option<f64>,
    grid_n: usize,
    max_crosscheck_dev: f64,
}

#[pymethods]
impl PyVerificationSummary {
    fn __repr__(&self) -> String {
        format!(
            "VerificationSummary(verdict={}, radius={:?}, grid_n={})",
            self.verdict, self.radius, self.grid_n
        )
    }
}

/// One printed value vs its recomputation.
#[pyclass(name = "ComparisonRow", get_all, frozen)]
struct PyComparisonRow {
    claim_id: String,
    paper_value: f64,
    computed_value: f64,
    abs_dev: f64,
    tolerance: f64,
    status: String,
    note: String,
}

#[pymethods]
impl PyComparisonRow {
    fn __repr__(&self) -> String {
        format!(
            "ComparisonRow(claim_id={:?}, status={}, abs_dev={})",
            self.claim_id, self.status, self.abs_dev
        )
    }
}

/// Dilogarithm Li2(x) on [0, 1].
#[pyfunction]
fn li2(x: f64) -> PyResult<f64> {
    specfun::li2(x).map_err(to_py_err)
}

/// log(1 - x) on [0, 1).
#[pyfunction]
fn log1m(x: f64) -> PyResult<f64> {
    specfun::log1m(x).map_err(to_py_err)
}

/// Sharp coefficient bound 2 / (alpha n^2 + (1 - alpha) n), n >= 2.
#[pyfunction]
fn coeff_w0h(n: u32, alpha: f64) -> PyResult<f64> {
    series::coeff_w0h(n, parse_alpha(alpha)?).map_err(to_py_err)
}

/// Majorant series of the extremal function.
#[pyfunction]
#[pyo3(signature = (r, alpha, eps=None))]
fn majorant_w0h(r: f64, alpha: f64, eps: Option<f64>) -> PyResult<PySeriesEval> {
    series::majorant_w0h(r, parse_alpha(alpha)?, eps.unwrap_or(DEFAULT_EPS))
        .map(Into::into)
        .map_err(to_py_err)
}

/// Boundary-distance constant of the extremal function.
#[pyfunction]
#[pyo3(signature = (alpha, eps=None))]
fn distance_w0h(alpha: f64, eps: Option<f64>) -> PyResult<PySeriesEval> {
    series::distance_w0h(parse_alpha(alpha)?, eps.unwrap_or(DEFAULT_EPS))
        .map(Into::into)
        .map_err(to_py_err)
}

/// Area ratio S_r / pi of the extremal function.
#[pyfunction]
#[pyo3(signature = (r, alpha, eps=None))]
fn area_ratio_w0h(r: f64, alpha: f64, eps: Option<f64>) -> PyResult<PySeriesEval> {
    series::area_ratio_w0h(r, parse_alpha(alpha)?, eps.unwrap_or(DEFAULT_EPS))
        .map(Into::into)
        .map_err(to_py_err)
}

/// Closed form of the alpha = 1/2 majorant tail.
#[pyfunction]
fn majorant_tail_closed_half(r: f64) -> PyResult<f64> {
    series::majorant_tail_closed_half(r).map_err(to_py_err)
}

/// Closed form of the alpha = 1/2 area tail.
#[pyfunction]
fn area_tail_closed_half(r: f64) -> PyResult<f64> {
    series::area_tail_closed_half(r).map_err(to_py_err)
}

/// 8 log 2 - 5, the alpha = 1/2 boundary distance.
#[pyfunction]
fn distance_closed_half() -> f64 {
    series::distance_closed_half()
}

/// Root of the printed closed form F (constant 29 + 8 log 2).
#[pyfunction]
#[pyo3(signature = (tol=None))]
fn f_literal_radius(tol: Option<f64>) -> PyResult<PyRadiusResult> {
    bohr_radius::solver::solve_radius(
        equations::eval_f_literal,
        bohr_radius::R_MAX,
        tol.unwrap_or(bohr_radius::DEFAULT_TOL),
    )
    .map(Into::into)
    .map_err(to_py_err)
}

/// Root of the printed closed form T (constant 45 - 8 log 2).
#[pyfunction]
#[pyo3(signature = (tol=None))]
fn t_literal_radius(tol: Option<f64>) -> PyResult<PyRadiusResult> {
    bohr_radius::solver::solve_radius(
        equations::eval_t_literal,
        bohr_radius::R_MAX,
        tol.unwrap_or(bohr_radius::DEFAULT_TOL),
    )
    .map(Into::into)
    .map_err(to_py_err)
}

/// Computes the sharp radius for a class / polynomial / variant problem.
///
/// Raises ValueError for invalid arguments and RuntimeError when the
/// equation has no root on its domain (power variant with m = 0).
#[pyfunction]
#[pyo3(signature = (class, alpha=None, poly=vec![], variant="majorant", m=1, tol=None))]
fn compute_radius(
    class: &str,
    alpha: Option<f64>,
    poly: Vec<f64>,
    variant: &str,
    m: u32,
    tol: Option<f64>,
) -> PyResult<PyRadiusResult> {
    let problem = parse_problem(class, alpha, poly, variant, m)?;
    problem
        .solve(tol.unwrap_or(bohr_radius::DEFAULT_TOL))
        .map(Into::into)
        .map_err(to_py_err)
}

/// Runs the inequality sweep for one problem and returns its summary.
#[pyfunction]
#[pyo3(signature = (class, alpha=None, poly=vec![], variant="majorant", m=1, grid_n=100))]
fn verify_bohr_inequality(
    class: &str,
    alpha: Option<f64>,
    poly: Vec<f64>,
    variant: &str,
    m: u32,
    grid_n: usize,
) -> PyResult<PyVerificationSummary> {
    let problem = parse_problem(class, alpha, poly, variant, m)?;
    let report = verify::verify_bohr_inequality(&problem, grid_n).map_err(to_py_err)?;
    Ok(PyVerificationSummary {
        verdict: report.verdict.as_str().to_string(),
        radius: report.radius.map(|r| r.radius),
        grid_n: report.grid_points.len(),
        max_crosscheck_dev: report.max_crosscheck_dev,
    })
}

/// Maximum closed-form vs series deviation over a grid.
#[pyfunction]
#[pyo3(signature = (grid_n=9))]
fn cross_check_closed_forms(grid_n: usize) -> PyResult<f64> {
    verify::cross_check_closed_forms(grid_n).map_err(to_py_err)
}

/// Recomputes every printed value; returns one ComparisonRow per claim.
#[pyfunction]
fn reproduce_paper_values() -> PyResult<Vec<PyComparisonRow>> {
    let rows = verify::reproduce_paper_values().map_err(to_py_err)?;
    Ok(rows
        .into_iter()
        .map(|row| PyComparisonRow {
            claim_id: row.claim_id,
            paper_value: row.paper_value,
            computed_value: row.computed_value,
            abs_dev: row.abs_dev,
            tolerance: row.tolerance,
            status: row.status.as_str().to_string(),
            note: row.note,
        })
        .collect())
}

/// True iff the reproduction table matches its hard-coded expected statuses.
#[pyfunction]
fn reproduction_is_expected() -> PyResult<bool> {
    let rows = verify::reproduce_paper_values().map_err(to_py_err)?;
    Ok(verify::reproduction_matches_expectations(&rows))
}

#[pymodule]
fn bohr_radius_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PySeriesEval>()?;
    m.add_class::<PyRadiusResult>()?;
    m.add_class::<PyVerificationSummary>()?;
    m.add_class::<PyComparisonRow>()?;
    m.add_function(wrap_pyfunction!(li2, m)?)?;
    m.add_function(wrap_pyfunction!(log1m, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_w0h, m)?)?;
    m.add_function(wrap_pyfunction!(majorant_w0h, m)?)?;
    m.add_function(wrap_pyfunction!(distance_w0h, m)?)?;
    m.add_function(wrap_pyfunction!(area_ratio_w0h, m)?)?;
    m.add_function(wrap_pyfunction!(majorant_tail_closed_half, m)?)?;
    m.add_function(wrap_pyfunction!(area_tail_closed_half, m)?)?;
    m.add_function(wrap_pyfunction!(distance_closed_half, m)?)?;
    m.add_function(wrap_pyfunction!(f_literal_radius, m)?)?;
    m.add_function(wrap_pyfunction!(t_literal_radius, m)?)?;
    m.add_function(wrap_pyfunction!(compute_radius, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bohr_inequality, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check_closed_forms, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_paper_values, m)?)?;
    m.add_function(wrap_pyfunction!(reproduction_is_expected, m)?)?;
    Ok(())
}
