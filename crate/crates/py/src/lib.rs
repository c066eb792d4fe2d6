//! Python bindings: exact values come back as `int` and `fractions.Fraction`,
//! radicals and extrapolation results as small wrapper classes.

use faltung::asymptotics::{self, AsymptoticEstimate, LeadingTarget};
use faltung::exact::{parse_rat, BigFloat, ExactInt, ExactRadical, ExactRat};
use faltung::recurrences::{self, WMode, WValues};
use faltung::{series, tutte, wright};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: faltung::Error) -> PyErr {
    match e {
        faltung::Error::Domain(m) => PyValueError::new_err(m),
        faltung::Error::Consistency(m) => PyArithmeticError::new_err(m),
    }
}

fn rat_arg(s: &str) -> PyResult<ExactRat> {
    parse_rat(s).map_err(to_py)
}

/// `q * 2^(half_pow_2/2) * pi^(half_pow_pi/2)`.
#[pyclass(frozen, eq, skip_from_py_object, name = "Radical")]
#[derive(Clone, PartialEq)]
struct PyRadical(ExactRadical);

#[pymethods]
impl PyRadical {
    #[getter]
    fn q(&self) -> ExactRat {
        self.0.canonical().q
    }

    #[getter]
    fn half_pow_2(&self) -> i64 {
        self.0.canonical().a
    }

    #[getter]
    fn half_pow_pi(&self) -> i64 {
        self.0.canonical().b
    }

    /// Decimal expansion with `digits` significant digits.
    #[pyo3(signature = (digits = 30))]
    fn decimal(&self, digits: usize) -> String {
        let bits = (digits as f64 * std::f64::consts::LOG2_10) as usize + 40;
        self.0.to_float(bits).to_sci_string(digits)
    }

    fn __float__(&self) -> f64 {
        self.0.to_float(128).to_f64()
    }

    fn __repr__(&self) -> String {
        let c = self.0.canonical();
        format!("Radical(q={}, half_pow_2={}, half_pow_pi={})", c.q, c.a, c.b)
    }
}

/// Result of a Richardson extrapolation.
#[pyclass(frozen, name = "Estimate")]
struct PyEstimate(AsymptoticEstimate);

#[pymethods]
impl PyEstimate {
    /// The limit to `digits` significant digits.
    #[pyo3(signature = (digits = 40))]
    fn limit(&self, digits: usize) -> String {
        self.0.limit.to_sci_string(digits)
    }

    /// The limit showing only digits supported by the error estimate.
    fn limit_display(&self) -> String {
        self.0.limit_display()
    }

    #[getter]
    fn error_estimate(&self) -> f64 {
        self.0.error_estimate.to_f64()
    }

    #[getter]
    fn reliable_digits(&self) -> usize {
        self.0.reliable_digits()
    }

    #[getter]
    fn model(&self) -> String {
        self.0.model.clone()
    }

    #[getter]
    fn precision(&self) -> usize {
        self.0.precision
    }

    fn __float__(&self) -> f64 {
        self.0.limit.to_f64()
    }

    fn __repr__(&self) -> String {
        format!("Estimate({} +- {})", self.0.limit_display(), self.0.error_estimate.to_sci_string(2))
    }
}

#[pyfunction]
fn a_table(max_k: usize, max_l: usize) -> Vec<Vec<ExactRat>> {
    let t = recurrences::a_table(max_k, max_l);
    (0..=max_k).map(|k| t.row(k).to_vec()).collect()
}

#[pyfunction]
#[pyo3(signature = (n, alpha1 = "1/50"))]
fn alpha_seq(n: usize, alpha1: &str) -> PyResult<Vec<ExactRat>> {
    recurrences::alpha_seq(n, &rat_arg(alpha1)?).map_err(to_py)
}

#[pyfunction]
fn b_seq(g: usize) -> Vec<ExactRat> {
    recurrences::b_seq(g)
}

#[pyfunction]
fn beta_seq(g: usize) -> PyResult<Vec<ExactRat>> {
    recurrences::beta_seq(g).map_err(to_py)
}

/// Exact `w(0..=n)` as fractions, or decimal strings when `prec` is given.
#[pyfunction]
#[pyo3(signature = (n, prec = None))]
fn w_seq(py: Python<'_>, n: usize, prec: Option<usize>) -> PyResult<Py<PyAny>> {
    let mode = prec.map_or(WMode::Exact, WMode::Float);
    Ok(match recurrences::w_seq(n, mode).map_err(to_py)? {
        WValues::Exact(w) => w.into_pyobject(py)?.into_any().unbind(),
        WValues::Float(w) => {
            let digits = (prec.unwrap_or(64) as f64 * std::f64::consts::LOG10_2) as usize;
            let s: Vec<String> = w.iter().map(|x| x.to_sci_string(digits)).collect();
            s.into_pyobject(py)?.into_any().unbind()
        }
    })
}

#[pyfunction]
fn moment(k: usize, l: usize) -> PyResult<PyRadical> {
    recurrences::moment(k, l).map(|m| PyRadical(m.value)).map_err(to_py)
}

#[pyfunction]
fn verify_u_ode(alpha1: &str, order: usize) -> PyResult<bool> {
    series::verify_u_ode(&rat_arg(alpha1)?, order).map(|r| r.is_zero()).map_err(to_py)
}

/// `(painleve_holds, transformed_equation_holds, gate)`.
#[pyfunction]
#[pyo3(signature = (order, alpha1 = "1/50"))]
fn verify_painleve(order: usize, alpha1: &str) -> PyResult<(bool, bool, ExactRat)> {
    let r = series::verify_painleve_y(&rat_arg(alpha1)?, order).map_err(to_py)?;
    Ok((r.painleve_holds(), r.full_holds(), r.gate))
}

#[pyfunction]
fn f_wright(n: usize, m: usize) -> PyResult<ExactInt> {
    wright::f_wright(n, m).map_err(to_py)
}

#[pyfunction]
fn f_bruteforce(n: usize, e: usize) -> PyResult<ExactInt> {
    wright::f_bruteforce(n, e).map_err(to_py)
}

#[pyfunction]
fn rho(m: usize) -> PyResult<PyRadical> {
    wright::rho(m).map(PyRadical).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (m, n_max = 40, prec = 512))]
fn rho_convergence(m: usize, n_max: usize, prec: usize) -> PyResult<PyEstimate> {
    wright::rho_convergence(m, n_max, prec).map(PyEstimate).map_err(to_py)
}

#[pyfunction]
fn t_series(g: usize, order: usize) -> PyResult<Vec<ExactInt>> {
    tutte::t_series(g, order).map(|t| t.coeffs).map_err(to_py)
}

#[pyfunction]
fn tau(g: usize) -> PyResult<PyRadical> {
    tutte::tau(g).map(PyRadical).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g, n_max = 200, prec = 512))]
fn tau_convergence(g: usize, n_max: usize, prec: usize) -> PyResult<PyEstimate> {
    tutte::tau_convergence(g, n_max, prec).map(PyEstimate).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (alpha1, n_max = 160, prec = 1024))]
fn c_limit(alpha1: &str, n_max: usize, prec: usize) -> PyResult<PyEstimate> {
    asymptotics::c_limit(&rat_arg(alpha1)?, n_max, prec).map(PyEstimate).map_err(to_py)
}

/// `(sigma, prefactor)` estimates.
#[pyfunction]
#[pyo3(signature = (n_max = 2000, prec = 768))]
fn w_growth(n_max: usize, prec: usize) -> PyResult<(PyEstimate, PyEstimate)> {
    let w = asymptotics::w_growth(n_max, prec).map_err(to_py)?;
    Ok((PyEstimate(w.sigma), PyEstimate(w.prefactor)))
}

#[pyfunction]
#[pyo3(signature = (target, n_max = 120, prec = 1024))]
fn check_asymptotics(target: &str, n_max: usize, prec: usize) -> PyResult<PyEstimate> {
    let t: LeadingTarget = target.parse().map_err(to_py)?;
    asymptotics::check_leading_asymptotics(t, n_max, prec).map(PyEstimate).map_err(to_py)
}

/// Richardson extrapolation in `1/n` of `(n, value)` pairs, with values
/// given as strings such as `"3/7"` or `"2.718"`.
#[pyfunction]
#[pyo3(signature = (values, levels, prec = 256))]
fn richardson(values: Vec<(u64, String)>, levels: usize, prec: usize) -> PyResult<PyEstimate> {
    let pts = values
        .iter()
        .map(|(n, v)| Ok((*n, BigFloat::from_rat(&rat_arg(v)?, prec))))
        .collect::<PyResult<Vec<_>>>()?;
    asymptotics::richardson(&pts, levels).map(PyEstimate).map_err(to_py)
}

#[pymodule]
fn pyfaltung(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRadical>()?;
    m.add_class::<PyEstimate>()?;
    m.add_function(wrap_pyfunction!(a_table, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_seq, m)?)?;
    m.add_function(wrap_pyfunction!(b_seq, m)?)?;
    m.add_function(wrap_pyfunction!(beta_seq, m)?)?;
    m.add_function(wrap_pyfunction!(w_seq, m)?)?;
    m.add_function(wrap_pyfunction!(moment, m)?)?;
    m.add_function(wrap_pyfunction!(verify_u_ode, m)?)?;
    m.add_function(wrap_pyfunction!(verify_painleve, m)?)?;
    m.add_function(wrap_pyfunction!(f_wright, m)?)?;
    m.add_function(wrap_pyfunction!(f_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(rho_convergence, m)?)?;
    m.add_function(wrap_pyfunction!(t_series, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(tau_convergence, m)?)?;
    m.add_function(wrap_pyfunction!(c_limit, m)?)?;
    m.add_function(wrap_pyfunction!(w_growth, m)?)?;
    m.add_function(wrap_pyfunction!(check_asymptotics, m)?)?;
    m.add_function(wrap_pyfunction!(richardson, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
