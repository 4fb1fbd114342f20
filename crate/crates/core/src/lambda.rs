//! The two λ-ring structures.
//!
//! * Geometric: Kapranov's σ-operations on `Z[L]`, determined by
//!   `σ_t(L^m) = 1/(1 - L^m t)` and `σ_t(a + b) = σ_t(a) σ_t(b)`.
//! * Categorical: σ-operations on the integer image of the dg measure,
//!   determined by `σ_t(1) = prod_k 1/(1 - t^k)` and multiplicativity, so
//!   `σ_t(d) = P(t)^d` where `P` is the partition generating function.
//!
//! The categorical structure is a modelling assumption: symmetric powers are
//! only defined on categories, and this extends the point case to all of `Z`
//! by multiplicativity. It does not claim to compute `[Sym^n C]` for a general
//! category `C`.
//!
//! The evaluation `L -> 1` is a ring map but does not intertwine the two
//! structures; [`LambdaStructure::sigma_integer`] makes that visible.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::LefschetzPoly;
use crate::series::{IntSeries, PolySeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaStructure {
    /// `σ_t(1) = 1/(1 - t)`; acts on `Z[L]` and on `Z` as its quotient.
    Geometric,
    /// `σ_t(1) = prod_{k>=1} 1/(1 - t^k)`; acts on `Z` only.
    Categorical,
}

impl LambdaStructure {
    /// `σ_t(d)` for an integer class `d` under this structure.
    pub fn sigma_integer(self, d: &BigInt, precision: usize) -> IntSeries {
        match self {
            Self::Geometric => sigma_series(&LefschetzPoly::constant(d.clone()), precision).specialize(),
            Self::Categorical => sigma_series_categorical(d, precision),
        }
    }
}

/// `1 - L^m t`.
fn line_factor(m: u32, precision: usize) -> PolySeries {
    PolySeries::new(
        vec![LefschetzPoly::one(), -LefschetzPoly::affine(m)],
        precision,
    )
}

/// Geometric `σ_t(c) = sum σ^n(c) t^n`, computed as the finite product
/// `prod_m (1 - L^m t)^(-a_m)` for `c = sum a_m L^m`.
pub fn sigma_series(c: &LefschetzPoly, precision: usize) -> PolySeries {
    c.terms().fold(PolySeries::one(precision), |acc, (m, a)| {
        let factor = line_factor(m, precision)
            .pow(&-a)
            .expect("1 - L^m t has unit constant term");
        acc.mul(&factor)
    })
}

/// `σ^n(c)`, the class of the n-th symmetric power.
pub fn sym_power(c: &LefschetzPoly, n: usize) -> LefschetzPoly {
    sigma_series(c, n).coeff(n).clone()
}

/// `λ_t(c) = σ_{-t}(c)^(-1)`.
pub fn lambda_series(c: &LefschetzPoly, precision: usize) -> PolySeries {
    sigma_series(c, precision)
        .negate_variable()
        .inverse()
        .expect("σ_t has constant term 1")
}

/// `λ^n(c)`, the n-th exterior power.
pub fn lambda_power(c: &LefschetzPoly, n: usize) -> LefschetzPoly {
    lambda_series(c, n).coeff(n).clone()
}

/// Adams operation `ψ^k(sum a_m L^m) = sum a_m L^(mk)`.
pub fn adams(c: &LefschetzPoly, k: u32) -> Result<LefschetzPoly> {
    if k == 0 {
        return Err(Error::ZeroIndex { op: "Adams operation" });
    }
    Ok(c.substitute_power(k))
}

/// Euler's product `prod_{k=1}^{N} (1 - t^k)`, i.e. `1/P(t)` to order `N`.
pub fn euler_product(precision: usize) -> IntSeries {
    (1..=precision).fold(IntSeries::one(precision), |acc, k| {
        let factor = IntSeries::one(precision).sub(&IntSeries::monomial(BigInt::one(), k, precision));
        acc.mul(&factor)
    })
}

/// Categorical `σ_t(d) = P(t)^d` where `P(t) = prod_k 1/(1 - t^k)`.
pub fn sigma_series_categorical(d: &BigInt, precision: usize) -> IntSeries {
    if d.is_zero() {
        return IntSeries::one(precision);
    }
    euler_product(precision)
        .pow(&-d)
        .expect("Euler product has constant term 1")
}
