use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use scatter_entangle as se;
use se::scan::{Interaction, ScanConfig, ScanRecord};
use se::{ExchangeStatistics, NormalizedAmplitudePair, Slot};

fn to_py(e: se::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn angle(theta: f64) -> PyResult<se::Angle> {
    se::Angle::new(theta).map_err(to_py)
}

fn stats(name: &str) -> PyResult<ExchangeStatistics> {
    name.parse().map_err(to_py)
}

fn parse_interaction(name: &str) -> PyResult<Interaction> {
    name.parse().map_err(to_py)
}

fn amps(f_plus: Complex64, f_minus: Complex64) -> PyResult<NormalizedAmplitudePair> {
    let norm_sq = f_plus.norm_sqr() + f_minus.norm_sqr();
    if (norm_sq - 1.0).abs() > se::NORM_TOL {
        return Err(to_py(se::Error::NotNormalized(norm_sq)));
    }
    se::normalize(se::AmplitudePair::new(f_plus, f_minus)).map_err(to_py)
}

fn unit(v: [f64; 3]) -> PyResult<se::UnitVector3> {
    se::UnitVector3::new(v[0], v[1], v[2]).map_err(to_py)
}

/// Normalized two-spin state over `(uu, ud, du, dd)`.
#[pyclass(
    name = "TwoSpinState",
    module = "scatter_entangle",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyTwoSpinState {
    inner: se::TwoSpinState,
}

#[pymethods]
impl PyTwoSpinState {
    #[new]
    fn new(coefficients: [Complex64; 4]) -> PyResult<Self> {
        Ok(Self {
            inner: se::TwoSpinState::new(coefficients).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn singlet() -> Self {
        Self {
            inner: se::TwoSpinState::singlet(),
        }
    }

    #[getter]
    fn coefficients(&self) -> [Complex64; 4] {
        *self.inner.coefficients()
    }

    /// Partial trace leaving `slot` (1 or 2).
    #[pyo3(signature = (slot = 1))]
    fn reduced_density_matrix(&self, slot: u8) -> PyResult<[[Complex64; 2]; 2]> {
        let slot = match slot {
            1 => Slot::First,
            2 => Slot::Second,
            _ => return Err(PyValueError::new_err("slot must be 1 or 2")),
        };
        Ok(se::reduced_density_matrix(&self.inner, slot).entries)
    }

    fn entropy(&self) -> f64 {
        se::entropy_of_state(&self.inner)
    }

    fn correlator(&self, a: [f64; 3], b: [f64; 3]) -> PyResult<f64> {
        se::correlator_oracle(&self.inner, &unit(a)?, &unit(b)?).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        let c = self.inner.coefficients();
        format!("TwoSpinState({}, {}, {}, {})", c[0], c[1], c[2], c[3])
    }
}

#[pyfunction]
fn mandelstam_t(theta: f64, mass: f64, energy: f64) -> PyResult<f64> {
    let kin = se::Kinematics::new(mass, energy).map_err(to_py)?;
    Ok(se::mandelstam_t(angle(theta)?, &kin))
}

#[pyfunction]
fn mandelstam_u(theta: f64, mass: f64, energy: f64) -> PyResult<f64> {
    let kin = se::Kinematics::new(mass, energy).map_err(to_py)?;
    Ok(se::mandelstam_u(angle(theta)?, &kin))
}

/// Raw `(N/t, N/u)`.
#[pyfunction]
#[pyo3(signature = (theta, mass, energy, charge_factor = 1.0))]
fn coulomb_amplitudes(
    theta: f64,
    mass: f64,
    energy: f64,
    charge_factor: f64,
) -> PyResult<(f64, f64)> {
    let kin = se::Kinematics::with_charge_factor(mass, energy, charge_factor).map_err(to_py)?;
    let pair = se::coulomb_amplitudes(angle(theta)?, &kin);
    Ok((pair.direct.re, pair.exchange.re))
}

#[pyfunction]
fn normalize(direct: Complex64, exchange: Complex64) -> PyResult<(Complex64, Complex64)> {
    let n = se::normalize(se::AmplitudePair::new(direct, exchange)).map_err(to_py)?;
    Ok((n.f_plus(), n.f_minus()))
}

#[pyfunction]
fn coulomb_f_pm(theta: f64) -> PyResult<(f64, f64)> {
    Ok(se::coulomb_f_pm(angle(theta)?))
}

#[pyfunction]
#[pyo3(signature = (f_plus, f_minus, statistics = "fermion"))]
fn outgoing_state(
    f_plus: Complex64,
    f_minus: Complex64,
    statistics: &str,
) -> PyResult<PyTwoSpinState> {
    Ok(PyTwoSpinState {
        inner: se::outgoing_state(&amps(f_plus, f_minus)?, stats(statistics)?),
    })
}

#[pyfunction]
fn distinguishable_outgoing_state(
    f_plus: Complex64,
    f_minus: Complex64,
) -> PyResult<PyTwoSpinState> {
    Ok(PyTwoSpinState {
        inner: se::distinguishable_outgoing_state(&amps(f_plus, f_minus)?),
    })
}

/// `(c_s, c_minus_s)`.
#[pyfunction]
fn slater_decomposition(f_plus: Complex64, f_minus: Complex64) -> PyResult<(Complex64, Complex64)> {
    let d = se::slater_decomposition(&amps(f_plus, f_minus)?);
    Ok((d.c_s, d.c_minus_s))
}

#[pyfunction]
#[pyo3(signature = (c_s, c_minus_s, epsilon = 1e-12))]
fn slater_rank(c_s: Complex64, c_minus_s: Complex64, epsilon: f64) -> PyResult<usize> {
    let d = se::SlaterDecomposition::new(c_s, c_minus_s).map_err(to_py)?;
    Ok(se::slater_rank(&d, epsilon))
}

#[pyfunction]
fn eoe_label_fixed(coefficients: Vec<Complex64>) -> PyResult<f64> {
    Ok(se::eoe_label_fixed(
        &se::SlCoefficients::new(coefficients).map_err(to_py)?,
    ))
}

#[pyfunction]
fn eoe_symmetrized(coefficients: Vec<Complex64>) -> PyResult<f64> {
    Ok(se::eoe_symmetrized(
        &se::SlCoefficients::new(coefficients).map_err(to_py)?,
    ))
}

#[pyfunction]
fn coulomb_entropy(theta: f64) -> PyResult<f64> {
    Ok(se::coulomb_entropy(angle(theta)?))
}

#[pyfunction]
fn correlator_closed_form(a: [f64; 3], b: [f64; 3], f_plus: f64, f_minus: f64) -> PyResult<f64> {
    se::correlator_closed_form(&unit(a)?, &unit(b)?, &amps(f_plus.into(), f_minus.into())?)
        .map_err(to_py)
}

#[pyfunction]
fn bell_f(f_plus: f64, f_minus: f64) -> PyResult<f64> {
    se::bell_f(&amps(f_plus.into(), f_minus.into())?).map_err(to_py)
}

#[pyfunction]
fn is_violated(f_plus: f64, f_minus: f64) -> PyResult<bool> {
    se::is_violated(&amps(f_plus.into(), f_minus.into())?).map_err(to_py)
}

/// `(a, b, c)` of the coplanar measurement geometry.
#[pyfunction]
fn standard_geometry() -> ([f64; 3], [f64; 3], [f64; 3]) {
    let g = se::BellGeometry::standard();
    (
        g.a_hat.components(),
        g.b_hat.components(),
        g.c_hat.components(),
    )
}

/// Angle in radians, or `None` when `F - 1` never changes sign.
#[pyfunction]
#[pyo3(signature = (interaction = "coulomb", tol = 1e-10))]
fn critical_angle(interaction: &str, tol: f64) -> PyResult<Option<f64>> {
    let provider = parse_interaction(interaction)?.provider().map_err(to_py)?;
    Ok(se::critical_angle(provider.as_ref(), tol)
        .map_err(to_py)?
        .map(|a| a.radians()))
}

fn record_dict<'py>(py: Python<'py>, r: &ScanRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theta", r.theta)?;
    d.set_item("f_plus", r.f_plus)?;
    d.set_item("f_minus", r.f_minus)?;
    d.set_item("entropy", r.entropy)?;
    d.set_item("F", r.f)?;
    d.set_item("violated", r.violated)?;
    d.set_item("slater_rank", r.slater_rank)?;
    Ok(d)
}

fn scan_records(
    theta_min: f64,
    theta_max: f64,
    steps: usize,
    interaction_name: &str,
    statistics: &str,
) -> PyResult<Vec<ScanRecord>> {
    let config = ScanConfig {
        theta_min,
        theta_max,
        steps,
        interaction: parse_interaction(interaction_name)?,
        statistics: stats(statistics)?,
    };
    se::scan::run_scan(&config).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (
    theta_min = se::scan::DEFAULT_THETA_MIN,
    theta_max = std::f64::consts::FRAC_PI_2,
    steps = se::scan::DEFAULT_STEPS,
    interaction = "coulomb",
    statistics = "fermion",
))]
fn scan<'py>(
    py: Python<'py>,
    theta_min: f64,
    theta_max: f64,
    steps: usize,
    interaction: &str,
    statistics: &str,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    scan_records(theta_min, theta_max, steps, interaction, statistics)?
        .iter()
        .map(|r| record_dict(py, r))
        .collect()
}

/// Same table as `scan`, rendered exactly as the CLI's CSV output.
#[pyfunction]
#[pyo3(signature = (
    theta_min = se::scan::DEFAULT_THETA_MIN,
    theta_max = std::f64::consts::FRAC_PI_2,
    steps = se::scan::DEFAULT_STEPS,
    interaction = "coulomb",
    statistics = "fermion",
))]
fn scan_csv(
    theta_min: f64,
    theta_max: f64,
    steps: usize,
    interaction: &str,
    statistics: &str,
) -> PyResult<String> {
    let records = scan_records(theta_min, theta_max, steps, interaction, statistics)?;
    let mut buf = Vec::new();
    se::scan::write_csv(&records, &mut buf).map_err(|e| PyValueError::new_err(e.to_string()))?;
    String::from_utf8(buf).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (theta, interaction = "coulomb", statistics = "fermion"))]
fn point<'py>(
    py: Python<'py>,
    theta: f64,
    interaction: &str,
    statistics: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let r = se::scan::point(theta, parse_interaction(interaction)?, stats(statistics)?)
        .map_err(to_py)?;
    record_dict(py, &r)
}

#[pymodule(name = "scatter_entangle")]
fn scatter_entangle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTwoSpinState>()?;
    m.add_function(wrap_pyfunction!(mandelstam_t, m)?)?;
    m.add_function(wrap_pyfunction!(mandelstam_u, m)?)?;
    m.add_function(wrap_pyfunction!(coulomb_amplitudes, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(coulomb_f_pm, m)?)?;
    m.add_function(wrap_pyfunction!(outgoing_state, m)?)?;
    m.add_function(wrap_pyfunction!(distinguishable_outgoing_state, m)?)?;
    m.add_function(wrap_pyfunction!(slater_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(slater_rank, m)?)?;
    m.add_function(wrap_pyfunction!(eoe_label_fixed, m)?)?;
    m.add_function(wrap_pyfunction!(eoe_symmetrized, m)?)?;
    m.add_function(wrap_pyfunction!(coulomb_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(correlator_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(bell_f, m)?)?;
    m.add_function(wrap_pyfunction!(is_violated, m)?)?;
    m.add_function(wrap_pyfunction!(standard_geometry, m)?)?;
    m.add_function(wrap_pyfunction!(critical_angle, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(scan_csv, m)?)?;
    m.add_function(wrap_pyfunction!(point, m)?)?;
    Ok(())
}
