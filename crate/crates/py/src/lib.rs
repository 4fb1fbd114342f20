//! Python bindings. Classes may be passed to any function as a
//! `LefschetzPoly`, an expression string such as `"P^2"`, or a Python int.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use motivic_zeta as mz;

#[pyclass(name = "LefschetzPoly", module = "motivic_zeta", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyLefschetzPoly {
    inner: mz::LefschetzPoly,
}

impl From<mz::LefschetzPoly> for PyLefschetzPoly {
    fn from(inner: mz::LefschetzPoly) -> Self {
        Self { inner }
    }
}

#[derive(FromPyObject)]
enum ClassArg {
    Poly(PyLefschetzPoly),
    Int(BigInt),
    Text(String),
}

impl ClassArg {
    fn into_poly(self) -> PyResult<mz::LefschetzPoly> {
        match self {
            ClassArg::Poly(p) => Ok(p.inner),
            ClassArg::Int(a) => Ok(mz::LefschetzPoly::constant(a)),
            ClassArg::Text(s) => parse_err(mz::parse_class(&s)),
        }
    }
}

fn parse_err<T>(r: Result<T, mz::ParseError>) -> PyResult<T> {
    r.map_err(|e| PyValueError::new_err(e.to_string()))
}

fn value_err<T>(r: mz::Result<T>) -> PyResult<T> {
    r.map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymethods]
impl PyLefschetzPoly {
    /// Builds `sum coeffs[m] * L^m` from ascending integer coefficients.
    #[new]
    #[pyo3(signature = (coeffs = Vec::new()))]
    fn new(coeffs: Vec<BigInt>) -> Self {
        mz::LefschetzPoly::from_dense(coeffs).into()
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_err(mz::parse_class(text)).map(Into::into)
    }

    #[staticmethod]
    fn affine(n: u32) -> Self {
        mz::LefschetzPoly::affine(n).into()
    }

    #[staticmethod]
    fn projective(n: u32) -> Self {
        mz::LefschetzPoly::projective(n).into()
    }

    /// `{exponent: coefficient}` for the non-zero terms.
    fn coefficients(&self) -> Vec<(u32, BigInt)> {
        self.inner.terms().map(|(m, a)| (m, a.clone())).collect()
    }

    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn eval_one(&self) -> BigInt {
        self.inner.eval_one()
    }

    fn __add__(&self, other: ClassArg) -> PyResult<Self> {
        Ok((&self.inner + &other.into_poly()?).into())
    }

    fn __radd__(&self, other: ClassArg) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: ClassArg) -> PyResult<Self> {
        Ok((&self.inner - &other.into_poly()?).into())
    }

    fn __rsub__(&self, other: ClassArg) -> PyResult<Self> {
        Ok((&other.into_poly()? - &self.inner).into())
    }

    fn __mul__(&self, other: ClassArg) -> PyResult<Self> {
        Ok((&self.inner * &other.into_poly()?).into())
    }

    fn __rmul__(&self, other: ClassArg) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __pow__(&self, e: u32, _modulo: Option<Py<PyAny>>) -> Self {
        self.inner.pow(e).into()
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __eq__(&self, other: ClassArg) -> bool {
        other.into_poly().is_ok_and(|p| p == self.inner)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LefschetzPoly.parse({:?})", self.inner.to_string())
    }
}

#[pyclass(name = "VerificationReport", module = "motivic_zeta", frozen)]
pub struct PyVerificationReport {
    inner: mz::VerificationReport,
}

#[pymethods]
impl PyVerificationReport {
    #[getter]
    fn identity(&self) -> &'static str {
        self.inner.identity.name()
    }

    #[getter]
    fn verified(&self) -> bool {
        self.inner.verified()
    }

    #[getter]
    fn precision(&self) -> usize {
        self.inner.precision
    }

    /// `(index, lhs, rhs)` of the first differing coefficient, or `None`.
    #[getter]
    fn mismatch(&self) -> Option<(usize, String, String)> {
        self.inner
            .mismatch
            .as_ref()
            .map(|m| (m.index, m.lhs.clone(), m.rhs.clone()))
    }

    fn __bool__(&self) -> bool {
        self.inner.verified()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<VerificationReport {}: {}>", self.inner.identity, self.inner)
    }
}

impl From<mz::VerificationReport> for PyVerificationReport {
    fn from(inner: mz::VerificationReport) -> Self {
        Self { inner }
    }
}

fn poly_coeffs(s: mz::PolySeries) -> Vec<PyLefschetzPoly> {
    s.into_coeffs().into_iter().map(Into::into).collect()
}

fn int_series(coeffs: Vec<BigInt>) -> PyResult<mz::IntSeries> {
    if coeffs.is_empty() {
        return Err(PyValueError::new_err("a series needs at least one coefficient"));
    }
    let n = coeffs.len() - 1;
    Ok(mz::IntSeries::new(coeffs, n))
}

#[pyfunction]
fn parse_class(text: &str) -> PyResult<PyLefschetzPoly> {
    PyLefschetzPoly::parse(text)
}

#[pyfunction]
fn render(c: ClassArg) -> PyResult<String> {
    Ok(mz::render(&c.into_poly()?))
}

#[pyfunction]
fn mu_dg(c: ClassArg) -> PyResult<BigInt> {
    Ok(mz::mu_dg(&c.into_poly()?))
}

/// Coefficients `[Sym^0 c], ..., [Sym^N c]` of the motivic zeta-function.
#[pyfunction]
#[pyo3(signature = (c, order = 16))]
fn zeta_motivic(c: ClassArg, order: usize) -> PyResult<Vec<PyLefschetzPoly>> {
    Ok(poly_coeffs(mz::zeta_motivic(&c.into_poly()?, order)))
}

#[pyfunction]
#[pyo3(signature = (c, order = 16))]
fn zeta_categorical(c: ClassArg, order: usize) -> PyResult<Vec<BigInt>> {
    Ok(mz::zeta_categorical(&c.into_poly()?, order).into_coeffs())
}

#[pyfunction]
#[pyo3(signature = (c, order = 16))]
fn zeta_theorem_rhs(c: ClassArg, order: usize) -> PyResult<Vec<BigInt>> {
    Ok(mz::zeta_theorem_rhs(&c.into_poly()?, order).into_coeffs())
}

#[pyfunction]
fn sym_power(c: ClassArg, n: usize) -> PyResult<PyLefschetzPoly> {
    Ok(mz::sym_power(&c.into_poly()?, n).into())
}

#[pyfunction]
fn lambda_power(c: ClassArg, n: usize) -> PyResult<PyLefschetzPoly> {
    Ok(mz::lambda_power(&c.into_poly()?, n).into())
}

#[pyfunction]
fn adams(c: ClassArg, k: u32) -> PyResult<PyLefschetzPoly> {
    value_err(mz::adams(&c.into_poly()?, k)).map(Into::into)
}

#[pyfunction]
#[pyo3(signature = (d, order = 16))]
fn sigma_categorical(d: BigInt, order: usize) -> Vec<BigInt> {
    mz::sigma_series_categorical(&d, order).into_coeffs()
}

/// `prod_k f(t^k)` for `f` given by its coefficients (constant term 1).
#[pyfunction]
#[pyo3(signature = (coeffs, order = None))]
fn exp_transform(coeffs: Vec<BigInt>, order: Option<usize>) -> PyResult<Vec<BigInt>> {
    let f = int_series(coeffs)?;
    let n = order.unwrap_or(f.precision());
    value_err(mz::exp_transform(&f, n)).map(mz::IntSeries::into_coeffs)
}

#[pyfunction]
#[pyo3(signature = (coeffs, order = None))]
fn mobius_transform(coeffs: Vec<BigInt>, order: Option<usize>) -> PyResult<Vec<BigInt>> {
    let g = int_series(coeffs)?;
    let n = order.unwrap_or(g.precision());
    value_err(mz::mobius_transform(&g, n)).map(mz::IntSeries::into_coeffs)
}

/// `[μ(1), ..., μ(n)]`.
#[pyfunction]
fn mobius_table(n: usize) -> Vec<i8> {
    mz::mobius_table(n).iter().map(|(_, m)| m).collect()
}

#[pyfunction]
fn partition_numbers(n: usize) -> Vec<BigInt> {
    mz::partition_numbers(n)
}

#[pyfunction]
#[pyo3(signature = (c, order = 16, structure = "categorical"))]
fn verify_theorem(c: ClassArg, order: usize, structure: &str) -> PyResult<PyVerificationReport> {
    let structure = match structure {
        "categorical" => mz::LambdaStructure::Categorical,
        "geometric" => mz::LambdaStructure::Geometric,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown structure {other:?}; expected \"categorical\" or \"geometric\""
            )))
        }
    };
    Ok(mz::verify_theorem_with(structure, &c.into_poly()?, order).into())
}

#[pyfunction]
#[pyo3(signature = (c, d, order = 16))]
fn verify_mult_kap(c: ClassArg, d: ClassArg, order: usize) -> PyResult<PyVerificationReport> {
    Ok(mz::verify_mult_kap(&c.into_poly()?, &d.into_poly()?, order).into())
}

#[pyfunction]
#[pyo3(signature = (c, d, order = 16))]
fn verify_mult_cat(c: ClassArg, d: ClassArg, order: usize) -> PyResult<PyVerificationReport> {
    Ok(mz::verify_mult_cat(&c.into_poly()?, &d.into_poly()?, order).into())
}

#[pyfunction]
#[pyo3(signature = (c, n, order = 16))]
fn verify_pn_power(c: ClassArg, n: u32, order: usize) -> PyResult<PyVerificationReport> {
    Ok(mz::verify_pn_power(&c.into_poly()?, n, order).into())
}

#[pyfunction]
#[pyo3(signature = (order = 16))]
fn verify_point_partition(order: usize) -> PyVerificationReport {
    mz::verify_point_partition(order).into()
}

#[pymodule]
#[pyo3(name = "motivic_zeta")]
fn motivic_zeta_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLefschetzPoly>()?;
    m.add_class::<PyVerificationReport>()?;
    m.add_function(wrap_pyfunction!(parse_class, m)?)?;
    m.add_function(wrap_pyfunction!(render, m)?)?;
    m.add_function(wrap_pyfunction!(mu_dg, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_motivic, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_categorical, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_theorem_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(sym_power, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_power, m)?)?;
    m.add_function(wrap_pyfunction!(adams, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_categorical, m)?)?;
    m.add_function(wrap_pyfunction!(exp_transform, m)?)?;
    m.add_function(wrap_pyfunction!(mobius_transform, m)?)?;
    m.add_function(wrap_pyfunction!(mobius_table, m)?)?;
    m.add_function(wrap_pyfunction!(partition_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_mult_kap, m)?)?;
    m.add_function(wrap_pyfunction!(verify_mult_cat, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pn_power, m)?)?;
    m.add_function(wrap_pyfunction!(verify_point_partition, m)?)?;
    Ok(())
}
