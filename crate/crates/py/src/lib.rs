//! Python bindings for the supercircle symbolic calculus.
//!
//! Builds as a `cdylib`; the shared library imports as `supercircle_py`.
//! Rational numbers cross the boundary exactly: returned values are
//! `fractions.Fraction` objects, and any argument whose `str()` reads as an
//! integer or `p/q` is accepted (so `int`, `str`, and `Fraction` all work —
//! floats are rejected, keeping the arithmetic exact). Wherever a
//! superfunction is expected, an expression string like `"x^2*xi + 1/3"` is
//! accepted in its place.

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use supercircle::betasolve::{solve_betas as solve_betas_core, BetaSolution};
use supercircle::cohom;
use supercircle::contact::{osp_basis as osp_basis_core, ContactField, Density};
use supercircle::diffop::DiffOperator;
use supercircle::error::{CalcError, ParseError};
use supercircle::expr::{parse_operator, parse_superfunction};
use supercircle::rat::{format_rat, parse_rat, Rat};
use supercircle::suites;
use supercircle::superfunc::{Parity, SuperFunction};
use supercircle::symcalc::{
    beta_table as beta_table_core, classify_resonance as classify_resonance_core,
    quantization_map as quantization_map_core, symbol_map as symbol_map_core, ResonanceClass,
    SymbolVector,
};

// ---------------------------------------------------------------------------
// conversions
// ---------------------------------------------------------------------------

fn calc_err(e: CalcError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_err(e: ParseError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Read an exact rational out of anything whose `str()` is `n` or `p/q`.
fn rat_from_any(obj: &Bound<'_, PyAny>) -> PyResult<Rat> {
    let text = obj.str()?.to_string();
    parse_rat(&text)
        .map_err(|msg| PyValueError::new_err(format!("bad rational {text:?}: {msg}")))
}

/// Hand an exact rational back as a `fractions.Fraction`.
fn fraction<'py>(py: Python<'py>, r: &Rat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rat(r),))
}

fn fraction_row<'py>(py: Python<'py>, row: &[Rat]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    row.iter().map(|r| fraction(py, r)).collect()
}

fn fraction_table<'py>(
    py: Python<'py>,
    table: &[Vec<Rat>],
) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
    table.iter().map(|row| fraction_row(py, row)).collect()
}

/// Accept either a `SuperFunction` instance or an expression string.
fn value_from_any(obj: &Bound<'_, PyAny>) -> PyResult<SuperFunction> {
    if let Ok(f) = obj.extract::<PySuperFunction>() {
        return Ok(f.inner);
    }
    if let Ok(text) = obj.extract::<String>() {
        return parse_superfunction(&text).map_err(parse_err);
    }
    Err(PyTypeError::new_err(
        "expected a SuperFunction or an expression string",
    ))
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
        Parity::Mixed => "mixed",
    }
}

// ---------------------------------------------------------------------------
// SuperFunction
// ---------------------------------------------------------------------------

/// A function `f₀(x) + ξ·f₁(x)` with exact rational polynomial parts.
#[pyclass(name = "SuperFunction", module = "supercircle_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PySuperFunction {
    inner: SuperFunction,
}

#[pymethods]
impl PySuperFunction {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self { inner: parse_superfunction(text).map_err(parse_err)? })
    }

    #[staticmethod]
    fn zero() -> Self {
        Self { inner: SuperFunction::zero() }
    }

    #[staticmethod]
    fn one() -> Self {
        Self { inner: SuperFunction::one() }
    }

    #[staticmethod]
    fn x() -> Self {
        Self { inner: SuperFunction::x() }
    }

    #[staticmethod]
    fn xi() -> Self {
        Self { inner: SuperFunction::xi() }
    }

    /// The monomial `c·x^degree`, times `ξ` when `odd` is true.
    #[staticmethod]
    fn monomial(c: &Bound<'_, PyAny>, degree: usize, odd: bool) -> PyResult<Self> {
        Ok(Self { inner: SuperFunction::monomial(rat_from_any(c)?, degree, odd) })
    }

    /// Dense ascending coefficients of the even and odd parts.
    fn coefficients<'py>(
        &self,
        py: Python<'py>,
    ) -> PyResult<(Vec<Bound<'py, PyAny>>, Vec<Bound<'py, PyAny>>)> {
        Ok((
            fraction_row(py, self.inner.even_coeff().coeffs())?,
            fraction_row(py, self.inner.odd_coeff().coeffs())?,
        ))
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// `"even"`, `"odd"`, or `"mixed"`.
    fn parity(&self) -> &'static str {
        parity_name(self.inner.parity())
    }

    /// The parity involution `f₀ − ξ·f₁`.
    fn sigma(&self) -> Self {
        Self { inner: self.inner.sigma() }
    }

    fn partial_x(&self) -> Self {
        Self { inner: self.inner.partial_x() }
    }

    /// The odd derivation `D = ∂ξ + ξ∂x`.
    fn d(&self) -> Self {
        Self { inner: self.inner.d() }
    }

    /// The odd derivation `D̄ = ∂ξ − ξ∂x`.
    fn dbar(&self) -> Self {
        Self { inner: self.inner.dbar() }
    }

    fn scale(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self { inner: self.inner.scale(&rat_from_any(c)?) })
    }

    fn __add__(&self, rhs: &Self) -> Self {
        Self { inner: &self.inner + &rhs.inner }
    }

    fn __sub__(&self, rhs: &Self) -> Self {
        Self { inner: &self.inner - &rhs.inner }
    }

    fn __mul__(&self, rhs: &Self) -> Self {
        Self { inner: &self.inner * &rhs.inner }
    }

    fn __neg__(&self) -> Self {
        Self { inner: -&self.inner }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SuperFunction({:?})", self.inner.to_string())
    }
}

// ---------------------------------------------------------------------------
// Density
// ---------------------------------------------------------------------------

/// A weighted density `f·dx^λ`: a superfunction value tagged with a weight.
#[pyclass(name = "Density", module = "supercircle_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDensity {
    inner: Density,
}

#[pymethods]
impl PyDensity {
    #[new]
    fn new(value: &Bound<'_, PyAny>, weight: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self { inner: Density::new(value_from_any(value)?, rat_from_any(weight)?) })
    }

    #[getter]
    fn value(&self) -> PySuperFunction {
        PySuperFunction { inner: self.inner.value().clone() }
    }

    #[getter]
    fn weight<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.weight())
    }

    /// The calibrated Poisson bracket; the result has weight `λ + μ + 1`.
    fn poisson_bracket(&self, other: &Self) -> Self {
        Self { inner: self.inner.poisson_bracket(&other.inner) }
    }

    fn __add__(&self, rhs: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.try_add(&rhs.inner).map_err(calc_err)? })
    }

    fn __neg__(&self) -> Self {
        Self { inner: self.inner.scale(&Rat::from_integer((-1).into())) }
    }

    fn scale(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self { inner: self.inner.scale(&rat_from_any(c)?) })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Density({:?})", self.inner.to_string())
    }
}

// ---------------------------------------------------------------------------
// ContactField
// ---------------------------------------------------------------------------

/// The contact vector field `X_h` generated by a Hamiltonian `h`.
#[pyclass(name = "ContactField", module = "supercircle_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyContactField {
    inner: ContactField,
}

#[pymethods]
impl PyContactField {
    #[new]
    fn new(hamiltonian: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self { inner: ContactField::new(value_from_any(hamiltonian)?) })
    }

    #[getter]
    fn hamiltonian(&self) -> PySuperFunction {
        PySuperFunction { inner: self.inner.hamiltonian().clone() }
    }

    fn parity(&self) -> &'static str {
        parity_name(self.inner.parity())
    }

    /// Apply the field to a plain superfunction.
    fn apply(&self, f: &Bound<'_, PyAny>) -> PyResult<PySuperFunction> {
        Ok(PySuperFunction { inner: self.inner.apply(&value_from_any(f)?) })
    }

    /// The weighted action on a density of any weight.
    fn lie_derivative(&self, density: &PyDensity) -> PyDensity {
        PyDensity { inner: self.inner.lie_derivative(&density.inner) }
    }

    /// `[X_f, X_g] = X_{{f,g}}` — the bracket is again a contact field.
    fn bracket(&self, other: &Self) -> Self {
        Self { inner: self.inner.bracket(&other.inner) }
    }

    fn __str__(&self) -> String {
        format!("X_{{{}}}", self.inner.hamiltonian())
    }

    fn __repr__(&self) -> String {
        format!("ContactField({:?})", self.inner.hamiltonian().to_string())
    }
}

// ---------------------------------------------------------------------------
// DiffOperator
// ---------------------------------------------------------------------------

/// A differential operator `Σ aₖ·D̄^k` acting from weight-λ densities to
/// weight-μ densities.
#[pyclass(name = "DiffOperator", module = "supercircle_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDiffOperator {
    inner: DiffOperator,
}

#[pymethods]
impl PyDiffOperator {
    #[new]
    fn new(
        text: &str,
        lambda: &Bound<'_, PyAny>,
        mu: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        let op = parse_operator(text, &rat_from_any(lambda)?, &rat_from_any(mu)?)
            .map_err(parse_err)?;
        Ok(Self { inner: op })
    }

    /// Build from dense ascending `D̄`-coefficients.
    #[staticmethod]
    fn from_coeffs(
        coeffs: Vec<Bound<'_, PyAny>>,
        lambda: &Bound<'_, PyAny>,
        mu: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        let coeffs: Vec<SuperFunction> =
            coeffs.iter().map(value_from_any).collect::<PyResult<_>>()?;
        Ok(Self {
            inner: DiffOperator::new(coeffs, rat_from_any(lambda)?, rat_from_any(mu)?),
        })
    }

    /// Dense ascending coefficients of `D̄^0, D̄^1, …`.
    #[getter]
    fn coeffs(&self) -> Vec<PySuperFunction> {
        self.inner
            .coeffs()
            .iter()
            .map(|c| PySuperFunction { inner: c.clone() })
            .collect()
    }

    #[getter]
    fn source_weight<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.source_weight())
    }

    #[getter]
    fn target_weight<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.target_weight())
    }

    /// Index of the highest nonzero coefficient, or `None` for the zero
    /// operator.
    #[getter]
    fn order(&self) -> Option<usize> {
        self.inner.order_index()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn parity(&self) -> &'static str {
        parity_name(self.inner.parity())
    }

    /// Apply to a density of the source weight.
    fn apply(&self, density: &PyDensity) -> PyResult<PyDensity> {
        Ok(PyDensity { inner: self.inner.apply(&density.inner).map_err(calc_err)? })
    }

    /// Compose with another operator (also available as the `@` operator).
    fn compose(&self, rhs: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.compose(&rhs.inner).map_err(calc_err)? })
    }

    fn __matmul__(&self, rhs: &Self) -> PyResult<Self> {
        self.compose(rhs)
    }

    fn __add__(&self, rhs: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.try_add(&rhs.inner).map_err(calc_err)? })
    }

    fn __sub__(&self, rhs: &Self) -> PyResult<Self> {
        let minus = rhs.inner.scale(&Rat::from_integer((-1).into()));
        Ok(Self { inner: self.inner.try_add(&minus).map_err(calc_err)? })
    }

    fn __neg__(&self) -> Self {
        Self { inner: self.inner.scale(&Rat::from_integer((-1).into())) }
    }

    fn scale(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self { inner: self.inner.scale(&rat_from_any(c)?) })
    }

    /// The top coefficient as a density of weight `μ − λ − order/2`.
    fn principal_symbol(&self) -> PyResult<PyDensity> {
        Ok(PyDensity { inner: self.inner.principal_symbol().map_err(calc_err)? })
    }

    /// Commutator with the weighted action of a contact field.
    fn lie_action(&self, field: &PyContactField) -> Self {
        Self { inner: self.inner.lie_action(&field.inner) }
    }

    /// Formal adjoint; swaps the weights `(λ, μ) ↦ (1/2 − μ, 1/2 − λ)`.
    fn conjugate(&self) -> Self {
        Self { inner: self.inner.conjugate() }
    }

    /// The full symbol at non-resonant weights.
    fn symbol(&self) -> PyResult<PySymbolVector> {
        Ok(PySymbolVector { inner: symbol_map_core(&self.inner).map_err(calc_err)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "DiffOperator({:?}, {:?}, {:?})",
            self.inner.to_string(),
            format_rat(self.inner.source_weight()),
            format_rat(self.inner.target_weight()),
        )
    }
}

// ---------------------------------------------------------------------------
// SymbolVector
// ---------------------------------------------------------------------------

/// The total symbol of an operator: one density per order, with part `j`
/// carrying weight `μ − λ − j/2`.
#[pyclass(name = "SymbolVector", module = "supercircle_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PySymbolVector {
    inner: SymbolVector,
}

#[pymethods]
impl PySymbolVector {
    #[new]
    fn new(
        parts: Vec<Bound<'_, PyAny>>,
        lambda: &Bound<'_, PyAny>,
        mu: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        let parts: Vec<SuperFunction> =
            parts.iter().map(value_from_any).collect::<PyResult<_>>()?;
        Ok(Self {
            inner: SymbolVector::new(parts, rat_from_any(lambda)?, rat_from_any(mu)?),
        })
    }

    /// Reassemble from weighted densities; the weights must lie on the
    /// ladder `μ − λ − j/2`.
    #[staticmethod]
    fn from_densities(
        densities: Vec<PyDensity>,
        lambda: &Bound<'_, PyAny>,
        mu: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        let densities: Vec<Density> = densities.into_iter().map(|d| d.inner).collect();
        let inner =
            SymbolVector::from_densities(&densities, rat_from_any(lambda)?, rat_from_any(mu)?)
                .map_err(calc_err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn parts(&self) -> Vec<PySuperFunction> {
        self.inner
            .parts()
            .iter()
            .map(|p| PySuperFunction { inner: p.clone() })
            .collect()
    }

    /// Part `j` as a density of its ladder weight.
    fn part(&self, j: usize) -> PyDensity {
        PyDensity { inner: self.inner.part(j) }
    }

    fn part_weight<'py>(&self, py: Python<'py>, j: usize) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.part_weight(j))
    }

    #[getter]
    fn source_weight<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.source_weight())
    }

    #[getter]
    fn target_weight<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.target_weight())
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Component-wise weighted action of a contact field.
    fn lie_derivative(&self, field: &PyContactField) -> Self {
        Self { inner: self.inner.lie_derivative(&field.inner) }
    }

    /// Invert the symbol map back to an operator.
    fn quantize(&self) -> PyResult<PyDiffOperator> {
        Ok(PyDiffOperator { inner: quantization_map_core(&self.inner).map_err(calc_err)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SymbolVector({:?})", self.inner.to_string())
    }
}

// ---------------------------------------------------------------------------
// module functions
// ---------------------------------------------------------------------------

/// The total symbol of an operator at non-resonant weights.
#[pyfunction]
fn symbol_map(op: &PyDiffOperator) -> PyResult<PySymbolVector> {
    op.symbol()
}

/// The inverse of the symbol map at non-resonant weights.
#[pyfunction]
fn quantization_map(symbol: &PySymbolVector) -> PyResult<PyDiffOperator> {
    symbol.quantize()
}

/// Classify a weight pair: returns `("non-resonant", None)`,
/// `("resonant-generic", m)`, or `("resonant-special", m)` with
/// `m = 2(μ−λ)`.
#[pyfunction]
fn classify_resonance(
    lambda: &Bound<'_, PyAny>,
    mu: &Bound<'_, PyAny>,
) -> PyResult<(&'static str, Option<usize>)> {
    Ok(match classify_resonance_core(&rat_from_any(lambda)?, &rat_from_any(mu)?) {
        ResonanceClass::NonResonant => ("non-resonant", None),
        ResonanceClass::ResonantGeneric(m) => ("resonant-generic", Some(m)),
        ResonanceClass::ResonantSpecial(m) => ("resonant-special", Some(m)),
    })
}

/// The closed-form commutation coefficients up to order `kmax`; row `k`
/// holds the coefficients of the order-`k` conversion.
#[pyfunction]
fn beta_table<'py>(
    py: Python<'py>,
    lambda: &Bound<'py, PyAny>,
    mu: &Bound<'py, PyAny>,
    kmax: usize,
) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
    let table = beta_table_core(&rat_from_any(lambda)?, &rat_from_any(mu)?, kmax)
        .map_err(calc_err)?;
    fraction_table(py, &table)
}

/// Solve the equivariance equations directly. Returns a dict with
/// `classification` (`"unique"` or `"family"`), the coefficient `table`
/// (the canonical member when a family exists), and for families the
/// `dimension` of the solution space. Raises `ValueError` when the
/// weights are resonant with no equivariant symbol map at all.
#[pyfunction]
fn solve_betas<'py>(
    py: Python<'py>,
    lambda: &Bound<'py, PyAny>,
    mu: &Bound<'py, PyAny>,
    kmax: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let solution = solve_betas_core(&rat_from_any(lambda)?, &rat_from_any(mu)?, kmax)
        .map_err(calc_err)?;
    let dict = PyDict::new(py);
    match solution {
        BetaSolution::Unique { table } => {
            dict.set_item("classification", "unique")?;
            dict.set_item("table", fraction_table(py, &table)?)?;
        }
        BetaSolution::Family { dimension, canonical } => {
            dict.set_item("classification", "family")?;
            dict.set_item("dimension", dimension)?;
            dict.set_item("table", fraction_table(py, &canonical)?)?;
        }
    }
    Ok(dict)
}

/// The five conformal generators `X_1, X_x, X_{x²}, X_ξ, X_{xξ}`.
#[pyfunction]
fn osp_basis() -> Vec<PyContactField> {
    osp_basis_core()
        .into_iter()
        .map(|f| PyContactField { inner: f })
        .collect()
}

/// The critical weight pair `((1−k)/4, (1+k)/4)` of the order-`k`
/// invariant power.
#[pyfunction]
fn bol_weights<'py>(py: Python<'py>, k: usize) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let (lambda, mu) = cohom::bol_weights(k);
    Ok((fraction(py, &lambda)?, fraction(py, &mu)?))
}

/// The conformally invariant power `D̄^k` (odd `k`) at its critical
/// weights.
#[pyfunction]
fn bol_operator(k: usize) -> PyResult<PyDiffOperator> {
    Ok(PyDiffOperator { inner: cohom::bol_operator(k).map_err(calc_err)? })
}

/// The order-lowering cocycle value `γ_k(X_h)` at source weight λ.
#[pyfunction]
fn gamma_cocycle(
    k: usize,
    hamiltonian: &Bound<'_, PyAny>,
    lambda: &Bound<'_, PyAny>,
) -> PyResult<PyDiffOperator> {
    let field = ContactField::new(value_from_any(hamiltonian)?);
    Ok(PyDiffOperator { inner: cohom::gamma_cocycle(k, &field, &rat_from_any(lambda)?) })
}

/// Measure the obstruction to equivariant quantization at resonant
/// weights `μ = λ + m/2`. Returns a dict with `shift`, the proportionality
/// `scalar`, and the `proportional`/`vanishes` flags.
#[pyfunction]
fn obstruction_class<'py>(
    py: Python<'py>,
    lambda: &Bound<'py, PyAny>,
    mu: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyDict>> {
    let report = cohom::obstruction_class(&rat_from_any(lambda)?, &rat_from_any(mu)?)
        .map_err(calc_err)?;
    let dict = PyDict::new(py);
    dict.set_item("shift", report.shift)?;
    dict.set_item("scalar", fraction(py, &report.scalar)?)?;
    dict.set_item("proportional", report.proportional)?;
    dict.set_item("vanishes", report.vanishes)?;
    Ok(dict)
}

/// Names of the built-in verification suites.
#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    suites::SUITE_NAMES.to_vec()
}

/// Run one verification suite; returns a dict with `name`, `passed`, and
/// the `(label, passed)` pairs under `checks`.
#[pyfunction]
fn run_suite<'py>(py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyDict>> {
    let report = suites::run_suite(name).ok_or_else(|| {
        PyValueError::new_err(format!(
            "unknown suite {name:?}; expected one of {}",
            suites::SUITE_NAMES.join(", ")
        ))
    })?;
    let dict = PyDict::new(py);
    dict.set_item("name", report.name)?;
    dict.set_item("passed", report.passed())?;
    let checks: Vec<(&'static str, bool)> =
        report.checks.iter().map(|c| (c.label, c.passed)).collect();
    dict.set_item("checks", checks)?;
    Ok(dict)
}

// ---------------------------------------------------------------------------
// module
// ---------------------------------------------------------------------------

#[pymodule]
fn supercircle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySuperFunction>()?;
    m.add_class::<PyDensity>()?;
    m.add_class::<PyContactField>()?;
    m.add_class::<PyDiffOperator>()?;
    m.add_class::<PySymbolVector>()?;
    m.add_function(wrap_pyfunction!(symbol_map, m)?)?;
    m.add_function(wrap_pyfunction!(quantization_map, m)?)?;
    m.add_function(wrap_pyfunction!(classify_resonance, m)?)?;
    m.add_function(wrap_pyfunction!(beta_table, m)?)?;
    m.add_function(wrap_pyfunction!(solve_betas, m)?)?;
    m.add_function(wrap_pyfunction!(osp_basis, m)?)?;
    m.add_function(wrap_pyfunction!(bol_weights, m)?)?;
    m.add_function(wrap_pyfunction!(bol_operator, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_cocycle, m)?)?;
    m.add_function(wrap_pyfunction!(obstruction_class, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
