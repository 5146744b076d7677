//! Python bindings for the solenoid library.
//!
//! Exact rationals cross the boundary as `Rat` objects, strings like
//! `"3/10"`, or Python ints; primes are plain ints. Everything stays exact:
//! no floats anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyModule;

use solenoid::adele::{AdeleClass, FiniteAdele};
use solenoid::character::{chi, separating_probe};
use solenoid::extension::{
    congruent_z, congruent_z0, exactness_witness, splitting_defect, ExtPresentation, RigidExt,
};
use solenoid::numberfield::{ok_action, BasisKind, OkExt, QuadraticField};
use solenoid::padic;
use solenoid::parse::{parse_adele_class, parse_ext_spec};
use solenoid::primes::Prime;
use solenoid::rat::Rat;

fn to_py_err(e: solenoid::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn prime(p: u64) -> PyResult<Prime> {
    Prime::new(p).map_err(to_py_err)
}

/// Accept a rational as `Rat`, `int`, or `"n/d"` string.
#[derive(FromPyObject)]
enum RatLike {
    Wrapped(PyRat),
    Int(BigInt),
    Text(String),
}

impl RatLike {
    fn into_rat(self) -> PyResult<Rat> {
        match self {
            RatLike::Wrapped(r) => Ok(r.0),
            RatLike::Int(n) => Ok(Rat::from_bigint(n)),
            RatLike::Text(s) => s.parse().map_err(to_py_err),
        }
    }
}

/// An exact rational in lowest terms.
#[pyclass(name = "Rat", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyRat(Rat);

#[pymethods]
impl PyRat {
    #[new]
    fn new(value: RatLike) -> PyResult<Self> {
        value.into_rat().map(PyRat)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rat('{}')", self.0)
    }

    fn __add__(&self, rhs: RatLike) -> PyResult<PyRat> {
        Ok(PyRat(&self.0 + &rhs.into_rat()?))
    }

    fn __sub__(&self, rhs: RatLike) -> PyResult<PyRat> {
        Ok(PyRat(&self.0 - &rhs.into_rat()?))
    }

    fn __mul__(&self, rhs: RatLike) -> PyResult<PyRat> {
        Ok(PyRat(&self.0 * &rhs.into_rat()?))
    }

    fn __truediv__(&self, rhs: RatLike) -> PyResult<PyRat> {
        let rhs = rhs.into_rat()?;
        if rhs.is_zero() {
            return Err(PyZeroDivisionError::new_err("division by zero"));
        }
        Ok(PyRat(&self.0 / &rhs))
    }

    fn __neg__(&self) -> PyRat {
        PyRat(-&self.0)
    }

    fn numer(&self) -> BigInt {
        self.0.numer().clone()
    }

    fn denom(&self) -> BigInt {
        self.0.denom().clone()
    }

    fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The representative of `self + Z` in `[0, 1)`.
    fn mod1(&self) -> PyRat {
        PyRat(self.0.mod1())
    }
}

/// A rational-entry finite adele: a tail value plus finitely many
/// prime-indexed overrides.
#[pyclass(name = "FiniteAdele", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFiniteAdele(FiniteAdele);

#[pymethods]
impl PyFiniteAdele {
    #[new]
    #[pyo3(signature = (tail, overrides = None))]
    fn new(tail: RatLike, overrides: Option<BTreeMap<u64, RatLike>>) -> PyResult<Self> {
        let mut entries = Vec::new();
        for (p, v) in overrides.unwrap_or_default() {
            entries.push((p, v.into_rat()?));
        }
        FiniteAdele::new(tail.into_rat()?, entries)
            .map(PyFiniteAdele)
            .map_err(to_py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("FiniteAdele('{}')", self.0)
    }

    fn __add__(&self, rhs: &PyFiniteAdele) -> PyFiniteAdele {
        PyFiniteAdele(&self.0 + &rhs.0)
    }

    fn __neg__(&self) -> PyFiniteAdele {
        PyFiniteAdele(-&self.0)
    }

    fn tail(&self) -> PyRat {
        PyRat(self.0.tail().clone())
    }

    fn component(&self, p: u64) -> PyResult<PyRat> {
        Ok(PyRat(self.0.component(prime(p)?).clone()))
    }

    fn overrides(&self) -> BTreeMap<u64, PyRat> {
        self.0
            .overrides()
            .iter()
            .map(|(p, v)| (p.get(), PyRat(v.clone())))
            .collect()
    }

    /// `Some(q)` iff this adele is the diagonal of a rational `q`.
    fn diagonal_part(&self) -> Option<PyRat> {
        self.0.diagonal_part().map(|q| PyRat(q.clone()))
    }

    /// Canonical representative mod the diagonal copy of Q.
    fn ext_class(&self) -> PyFiniteAdele {
        PyFiniteAdele(self.0.ext_class())
    }
}

/// A canonical solenoid element (adele class).
#[pyclass(name = "AdeleClass", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyAdeleClass(AdeleClass);

#[pymethods]
impl PyAdeleClass {
    #[new]
    fn new(real: RatLike, fin: &PyFiniteAdele) -> PyResult<Self> {
        Ok(PyAdeleClass(AdeleClass::canonicalize(
            real.into_rat()?,
            fin.0.clone(),
        )))
    }

    /// Parse the text form `real=<rat>; tail=<rat>; p:r; ...`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_adele_class(text).map(PyAdeleClass).map_err(to_py_err)
    }

    #[staticmethod]
    fn zero() -> Self {
        PyAdeleClass(AdeleClass::zero())
    }

    /// The inclusion of the identity path-component.
    #[staticmethod]
    fn real_inject(r: RatLike) -> PyResult<Self> {
        Ok(PyAdeleClass(AdeleClass::real_inject(r.into_rat()?)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AdeleClass('{}')", self.0)
    }

    fn __add__(&self, rhs: &PyAdeleClass) -> PyAdeleClass {
        PyAdeleClass(&self.0 + &rhs.0)
    }

    fn __neg__(&self) -> PyAdeleClass {
        PyAdeleClass(-&self.0)
    }

    fn real(&self) -> PyRat {
        PyRat(self.0.real().clone())
    }

    fn fin(&self) -> PyFiniteAdele {
        PyFiniteAdele(self.0.fin().clone())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Evaluate this class as a character of Q; the result lives in `[0,1)`.
    fn chi(&self, q: RatLike) -> PyResult<PyRat> {
        Ok(PyRat(chi(&self.0, &q.into_rat()?).value().clone()))
    }

    /// A rational at which the character is nonzero; `None` for the zero
    /// class.
    fn separating_probe(&self) -> Option<PyRat> {
        separating_probe(&self.0).map(PyRat)
    }
}

/// A rigidified extension of Q by Z: finite-adele data plus a splitting
/// slope.
#[pyclass(name = "RigidExt", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRigidExt(RigidExt);

#[pymethods]
impl PyRigidExt {
    #[new]
    fn new(fin: &PyFiniteAdele, sigma: RatLike) -> PyResult<Self> {
        Ok(PyRigidExt(RigidExt::new(
            ExtPresentation::new(fin.0.clone()),
            sigma.into_rat()?,
        )))
    }

    /// Parse the spec mini-language, e.g. `"sigma=1/3; 5:1"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_ext_spec(text)
            .map(|s| PyRigidExt(s.into_rigid()))
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn trivial() -> Self {
        PyRigidExt(RigidExt::trivial())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RigidExt('{}')", self.0)
    }

    fn sigma(&self) -> PyRat {
        PyRat(self.0.sigma().clone())
    }

    fn data(&self) -> PyFiniteAdele {
        PyFiniteAdele(self.0.presentation().data().clone())
    }

    /// The canonical rational lift of `phi_a(q)`.
    fn lift_phi(&self, q: RatLike) -> PyResult<PyRat> {
        self.0
            .presentation()
            .lift_phi(&q.into_rat()?)
            .map(PyRat)
            .map_err(to_py_err)
    }

    /// The attached character value at `q`, in `[0,1)`.
    fn delta_bar(&self, q: RatLike) -> PyResult<PyRat> {
        self.0
            .delta_bar(&q.into_rat()?)
            .map(|t| PyRat(t.value().clone()))
            .map_err(to_py_err)
    }

    /// The solenoid element of this extension.
    fn to_solenoid(&self) -> PyAdeleClass {
        PyAdeleClass(self.0.to_solenoid())
    }

    fn baer_sum(&self, rhs: &PyRigidExt) -> PyRigidExt {
        PyRigidExt(self.0.baer_sum(&rhs.0))
    }

    fn __add__(&self, rhs: &PyRigidExt) -> PyRigidExt {
        self.baer_sum(rhs)
    }

    fn __neg__(&self) -> PyRigidExt {
        PyRigidExt(self.0.neg())
    }

    /// Shift the splitting slope by `r`.
    fn r_action(&self, r: RatLike) -> PyResult<PyRigidExt> {
        Ok(PyRigidExt(self.0.r_action(&r.into_rat()?)))
    }

    /// The diagonal shift witnessing congruence of the underlying
    /// Z-extensions, or `None`.
    fn congruent_z(&self, rhs: &PyRigidExt) -> Option<PyRat> {
        congruent_z(self.0.forget(), rhs.0.forget()).map(|w| PyRat(w.d().clone()))
    }

    /// The witness for congruence as rigidified extensions, or `None`.
    fn congruent_z0(&self, rhs: &PyRigidExt) -> Option<PyRat> {
        congruent_z0(&self.0, &rhs.0).map(|w| PyRat(w.d().clone()))
    }

    /// The slope `r` realizing this extension from the trivial one, when
    /// the underlying Z-class is trivial.
    fn exactness_witness(&self) -> Option<PyRat> {
        exactness_witness(&self.0).map(PyRat)
    }

    /// The splitting defect against `rhs`, when the underlying Z-classes
    /// agree.
    fn splitting_defect(&self, rhs: &PyRigidExt) -> Option<PyRat> {
        splitting_defect(&self.0, &rhs.0).map(PyRat)
    }
}

/// A quadratic field `Q(sqrt(d))` for squarefree `d`.
#[pyclass(name = "QuadraticField", frozen, eq, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PyQuadraticField(QuadraticField);

#[pymethods]
impl PyQuadraticField {
    #[new]
    fn new(d: i64) -> PyResult<Self> {
        QuadraticField::new(d)
            .map(PyQuadraticField)
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("QuadraticField({})", self.0.d())
    }

    #[getter]
    fn d(&self) -> i64 {
        self.0.d()
    }

    #[getter]
    fn disc(&self) -> i64 {
        self.0.disc()
    }

    #[getter]
    fn haar_mass_squared(&self) -> u64 {
        self.0.haar_mass_squared()
    }

    /// `"sqrt"` or `"half"`, naming the integral basis generator.
    #[getter]
    fn basis_kind(&self) -> &'static str {
        match self.0.basis_kind() {
            BasisKind::Sqrt => "sqrt",
            BasisKind::Half => "half",
        }
    }

    /// The trace Gram matrix of the integral basis and its determinant.
    fn trace_gram(&self) -> ([[i64; 2]; 2], i64) {
        self.0.trace_gram()
    }

    /// The Haar mass as an exact radical string, e.g. `"2*sqrt(2)"`.
    fn haar_mass(&self) -> String {
        self.0.haar_mass().to_string()
    }

    /// `(coeff, radicand)` with mass `coeff * sqrt(radicand)`.
    fn haar_mass_parts(&self) -> (u64, u64) {
        let m = self.0.haar_mass();
        (m.coeff(), m.radicand())
    }

    /// Act by `x + y omega` on rank-2 extension data.
    fn act(&self, x: i64, y: i64, e: &PyOkExt) -> PyOkExt {
        PyOkExt(ok_action(&self.0, (x, y), &e.0))
    }
}

/// Rank-2 rigidified extension data over a quadratic field, in integral
/// basis coordinates.
#[pyclass(name = "OkExt", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyOkExt(OkExt);

#[pymethods]
impl PyOkExt {
    #[new]
    fn new(
        fin0: &PyFiniteAdele,
        fin1: &PyFiniteAdele,
        sigma0: RatLike,
        sigma1: RatLike,
    ) -> PyResult<Self> {
        Ok(PyOkExt(OkExt::new(
            [fin0.0.clone(), fin1.0.clone()],
            [sigma0.into_rat()?, sigma1.into_rat()?],
        )))
    }

    #[staticmethod]
    fn zero() -> Self {
        PyOkExt(OkExt::zero())
    }

    fn __add__(&self, rhs: &PyOkExt) -> PyOkExt {
        PyOkExt(self.0.add(&rhs.0))
    }

    fn __neg__(&self) -> PyOkExt {
        PyOkExt(self.0.neg())
    }

    fn to_solenoid_vector(&self) -> (PyAdeleClass, PyAdeleClass) {
        let [a, b] = self.0.to_solenoid_vector();
        (PyAdeleClass(a), PyAdeleClass(b))
    }

    fn eq_class(&self, rhs: &PyOkExt) -> bool {
        self.0.eq_class(&rhs.0)
    }
}

/// `(g, alpha, beta)` with `alpha*m + beta*n = g = gcd(m, n)` and
/// `0 <= beta < m/g`.
#[pyfunction]
fn bezout(m: BigInt, n: BigInt) -> PyResult<(BigInt, BigInt, BigInt)> {
    padic::bezout(&m, &n).map_err(to_py_err)
}

/// The exponent of `p` in a nonzero rational.
#[pyfunction]
fn valuation(q: RatLike, p: u64) -> PyResult<i64> {
    padic::valuation(&q.into_rat()?, prime(p)?).map_err(to_py_err)
}

/// The p-adic fractional part of `q`: in `[0, 1)` with p-power denominator.
#[pyfunction]
fn frac_p(q: RatLike, p: u64) -> PyResult<PyRat> {
    Ok(PyRat(padic::frac_p(&q.into_rat()?, prime(p)?).into_value()))
}

/// All nonzero p-adic fractional parts of `q`, keyed by prime.
#[pyfunction]
fn global_frac_parts(q: RatLike) -> PyResult<BTreeMap<u64, PyRat>> {
    let parts = padic::global_frac_parts(&q.into_rat()?).map_err(to_py_err)?;
    Ok(parts
        .into_iter()
        .map(|(p, part)| (p.get(), PyRat(part.into_value())))
        .collect())
}

/// Split `q = u - v` with `u` p-integral and `v` a p-power fraction.
#[pyfunction]
fn decompose(q: RatLike, p: u64) -> PyResult<(PyRat, PyRat)> {
    let (u, v) = padic::decompose(&q.into_rat()?, prime(p)?);
    Ok((PyRat(u), PyRat(v)))
}

/// Run the deterministic property suites; returns `(name, passed, total)`
/// triples.
#[pyfunction]
#[pyo3(signature = (seed = 1, cases = 100))]
fn selftest(seed: u64, cases: u32) -> Vec<(String, u64, u64)> {
    solenoid::selftest::run_suites(seed, cases)
        .into_iter()
        .map(|o| (o.name.to_string(), o.passed, o.total))
        .collect()
}

#[pymodule]
fn solenoid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRat>()?;
    m.add_class::<PyFiniteAdele>()?;
    m.add_class::<PyAdeleClass>()?;
    m.add_class::<PyRigidExt>()?;
    m.add_class::<PyQuadraticField>()?;
    m.add_class::<PyOkExt>()?;
    m.add_function(wrap_pyfunction!(bezout, m)?)?;
    m.add_function(wrap_pyfunction!(valuation, m)?)?;
    m.add_function(wrap_pyfunction!(frac_p, m)?)?;
    m.add_function(wrap_pyfunction!(global_frac_parts, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
