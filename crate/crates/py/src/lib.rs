//! Python bindings: the solution evaluators, normalization constants,
//! boundary-layer tables and divergence probes as a native module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fraclap::asymptotics::{self, TABLE_LOG_MODEL_EXPONENT};
use fraclap::lifting;
use fraclap::probe::{divergence_probe, ProbeSeries, DEFAULT_TERM_BUDGET};
use fraclap::riesz;
use fraclap::spectral;
use fraclap::{FracPower, TruncationPolicy};

fn err(e: fraclap::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn power(s: f64) -> PyResult<FracPower> {
    FracPower::new_with_limit(s).map_err(err)
}

fn truncation(max_index: usize) -> PyResult<TruncationPolicy> {
    TruncationPolicy::new(max_index).map_err(err)
}

/// Gamma function on the positive half line.
#[pyfunction]
fn gamma(x: f64) -> PyResult<f64> {
    fraclap::gamma(x).map_err(err)
}

/// Riesz ball-solution constant `c(n,s)`.
#[pyfunction]
fn riesz_ball_constant(n: u8, s: f64) -> PyResult<f64> {
    fraclap::riesz_ball_constant(n, power(s)?).map_err(err)
}

/// Fundamental-solution constant `a(n,s)`, defined for `2s != n`.
#[pyfunction]
fn fundamental_constant(n: u8, s: f64) -> PyResult<f64> {
    fraclap::fundamental_constant(n, power(s)?).map_err(err)
}

/// Riesz solution of the constant-RHS problem at a point of the unit ball.
#[pyfunction]
fn riesz_constant_rhs(x: Vec<f64>, n: u8, s: f64) -> PyResult<f64> {
    riesz::riesz_constant_rhs(&x, n, power(s)?).map_err(err)
}

/// Fundamental solution at a nonzero point.
#[pyfunction]
fn fundamental_solution(x: Vec<f64>, n: u8, s: f64) -> PyResult<f64> {
    riesz::fundamental_solution(&x, n, power(s)?).map_err(err)
}

/// Spectral constant-RHS solution on the interval, truncated series.
#[pyfunction]
fn spectral_constant_rhs_1d(x: f64, s: f64, max_index: usize) -> PyResult<f64> {
    spectral::spectral_constant_rhs_1d(x, power(s)?, &truncation(max_index)?).map_err(err)
}

/// Homogeneous part `w_{1,s}` of the 1D Dirac solution.
#[pyfunction]
fn spectral_dirac_1d(x: f64, s: f64, max_index: usize) -> PyResult<f64> {
    spectral::spectral_dirac_1d(x, power(s)?, &truncation(max_index)?).map_err(err)
}

/// Homogeneous part `w_{2,s}` of the 2D Dirac solution.
#[pyfunction]
fn spectral_dirac_2d(x: f64, y: f64, s: f64, max_index: usize) -> PyResult<f64> {
    spectral::spectral_dirac_2d(x, y, power(s)?, &truncation(max_index)?).map_err(err)
}

/// Full 1D Dirac solution `w_{1,s} + a(1,s)`; rejects `s = 1/2`.
#[pyfunction]
fn spectral_dirac_solution_1d(x: f64, s: f64, max_index: usize) -> PyResult<f64> {
    lifting::spectral_dirac_solution_1d(x, power(s)?, &truncation(max_index)?).map_err(err)
}

/// Harmonic-lift coefficients for the 2D Dirac solution.
#[pyclass(frozen)]
struct LiftCoefficients {
    inner: lifting::LiftCoefficients,
}

#[pymethods]
impl LiftCoefficients {
    #[new]
    #[pyo3(signature = (s, count=500, nodes=64))]
    fn new(s: f64, count: usize, nodes: usize) -> PyResult<Self> {
        Ok(Self { inner: lifting::lift_coefficients(power(s)?, count, nodes).map_err(err)? })
    }

    /// `A_k` (1-based index; even entries are exactly 0).
    fn coefficient(&self, k: usize) -> f64 {
        self.inner.coefficient(k)
    }

    fn __len__(&self) -> usize {
        self.inner.max_index()
    }
}

/// Harmonic lift `v_{2,s}(x,y)` carrying the Dirac boundary data.
#[pyfunction]
fn harmonic_lift_2d(x: f64, y: f64, s: f64, coeffs: &LiftCoefficients) -> PyResult<f64> {
    lifting::harmonic_lift_2d(x, y, power(s)?, &coeffs.inner).map_err(err)
}

/// Full 2D Dirac solution `w_{2,s} + a(2,s) v_{2,s}`.
#[pyfunction]
fn spectral_dirac_solution_2d(
    x: f64,
    y: f64,
    s: f64,
    max_index: usize,
    coeffs: &LiftCoefficients,
) -> PyResult<f64> {
    lifting::spectral_dirac_solution_2d(x, y, power(s)?, &truncation(max_index)?, &coeffs.inner)
        .map_err(err)
}

/// Boundary-layer ratio table rows as `(s, formulation, model, min, max)`.
#[pyfunction]
#[pyo3(signature = (s_list, h, j_first, j_last, max_index, log_exponent=TABLE_LOG_MODEL_EXPONENT))]
fn boundary_ratio_table(
    s_list: Vec<f64>,
    h: f64,
    j_first: usize,
    j_last: usize,
    max_index: usize,
    log_exponent: f64,
) -> PyResult<Vec<(f64, String, String, f64, f64)>> {
    let powers: Vec<FracPower> =
        s_list.into_iter().map(|v| FracPower::new(v).map_err(err)).collect::<PyResult<_>>()?;
    let rows = asymptotics::boundary_ratio_table(
        &powers,
        h,
        j_first,
        j_last,
        &truncation(max_index)?,
        log_exponent,
    )
    .map_err(err)?;
    Ok(rows
        .into_iter()
        .map(|r| (r.s.value(), r.formulation.to_string(), r.model.to_string(), r.min, r.max))
        .collect())
}

/// Raw `k_j` log-exponent estimates and their median: `(k_values, median)`.
#[pyfunction]
fn log_exponent_estimate(
    h: f64,
    j_first: usize,
    j_last: usize,
    max_index: usize,
) -> PyResult<(Vec<f64>, f64)> {
    let est = asymptotics::log_exponent_estimate(h, j_first, j_last, &truncation(max_index)?)
        .map_err(err)?;
    let median = est.median();
    Ok((est.k_values, median))
}

/// Divergence probe of `w_{1,s}(0)`, `w_{2,s}(0,0)` or `v_N'(0)`.
///
/// Returns `(crossings, final_value, terms_used)` where `crossings` maps each
/// threshold to the crossing term count or `None`.
#[pyfunction]
#[pyo3(signature = (series, thresholds, s=None, budget=DEFAULT_TERM_BUDGET))]
fn probe(
    series: &str,
    thresholds: Vec<f64>,
    s: Option<f64>,
    budget: u64,
) -> PyResult<(Vec<(f64, Option<u64>)>, f64, u64)> {
    let tagged = match (series, s) {
        ("w1_at_0", Some(sv)) => ProbeSeries::W1AtZero { s: FracPower::new(sv).map_err(err)? },
        ("w2_at_origin", Some(sv)) => {
            ProbeSeries::W2AtOrigin { s: FracPower::new(sv).map_err(err)? }
        }
        ("vn_prime_at_0", _) => ProbeSeries::VnPrimeAtZero,
        ("w1_at_0" | "w2_at_origin", None) => {
            return Err(PyValueError::new_err("this series needs the fractional power s"))
        }
        (other, _) => {
            return Err(PyValueError::new_err(format!(
                "unknown series '{other}', expected w1_at_0, w2_at_origin or vn_prime_at_0"
            )))
        }
    };
    let report = divergence_probe(tagged, &thresholds, budget);
    let crossings =
        report.crossings.iter().map(|c| (c.threshold, c.crossed_at)).collect();
    Ok((crossings, report.final_value, report.terms_used))
}

#[pymodule]
fn fraclap_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(riesz_ball_constant, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_constant, m)?)?;
    m.add_function(wrap_pyfunction!(riesz_constant_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_solution, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_constant_rhs_1d, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_dirac_1d, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_dirac_2d, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_dirac_solution_1d, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_dirac_solution_2d, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_lift_2d, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_ratio_table, m)?)?;
    m.add_function(wrap_pyfunction!(log_exponent_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(probe, m)?)?;
    m.add_class::<LiftCoefficients>()?;
    m.add("TABLE_LOG_MODEL_EXPONENT", TABLE_LOG_MODEL_EXPONENT)?;
    Ok(())
}
