//! Polynomials in the Lefschetz class `L = [A^1]` with integer coefficients.
//!
//! Every class handled by this crate lives in `Z[L]`: `[A^n] = L^n` and
//! `[P^n] = 1 + L + ... + L^n`. Coefficients may be negative (virtual classes).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element `sum a_m L^m` of `Z[L]`.
///
/// Stored sparsely; zero coefficients are never kept, so structural equality
/// is ring equality and the zero polynomial has empty support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LefschetzPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl LefschetzPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(a: impl Into<BigInt>) -> Self {
        Self::monomial(a, 0)
    }

    /// `a * L^m`.
    pub fn monomial(a: impl Into<BigInt>, m: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(m, a.into());
        p
    }

    /// The Lefschetz class `L`.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1)
    }

    /// `[A^n] = L^n`.
    pub fn affine(n: u32) -> Self {
        Self::monomial(1, n)
    }

    /// `[P^n] = 1 + L + ... + L^n`.
    pub fn projective(n: u32) -> Self {
        Self::from_terms((0..=n).map(|m| (m, BigInt::one())))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, BigInt)>,
    {
        let mut p = Self::zero();
        for (m, a) in terms {
            p.add_term(m, a);
        }
        p
    }

    /// Builds `sum coeffs[m] L^m` from a dense ascending list.
    pub fn from_dense<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(m, a)| (m as u32, a.into())),
        )
    }

    fn add_term(&mut self, m: u32, a: BigInt) {
        if a.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(m).or_insert_with(BigInt::zero);
        *slot += a;
        if slot.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|a| a.is_one())
    }

    /// True when the polynomial has exactly one non-zero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Highest exponent with a non-zero coefficient, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of `L^m` (zero when absent).
    pub fn coeff(&self, m: u32) -> BigInt {
        self.coeffs.get(&m).cloned().unwrap_or_default()
    }

    /// Non-zero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&m, a)| (m, a))
    }

    /// Value at `L = 1`, i.e. the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Substitutes `L -> L^k` (`k = 0` collapses every power to 1).
    pub fn substitute_power(&self, k: u32) -> Self {
        Self::from_terms(self.terms().map(|(m, a)| (m * k, a.clone())))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl From<BigInt> for LefschetzPoly {
    fn from(a: BigInt) -> Self {
        Self::constant(a)
    }
}

impl From<i64> for LefschetzPoly {
    fn from(a: i64) -> Self {
        Self::constant(a)
    }
}

impl<'a> Add<&'a LefschetzPoly> for &'a LefschetzPoly {
    type Output = LefschetzPoly;

    fn add(self, rhs: &'a LefschetzPoly) -> LefschetzPoly {
        let mut out = self.clone();
        for (m, a) in rhs.terms() {
            out.add_term(m, a.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LefschetzPoly> for &'a LefschetzPoly {
    type Output = LefschetzPoly;

    fn sub(self, rhs: &'a LefschetzPoly) -> LefschetzPoly {
        let mut out = self.clone();
        for (m, a) in rhs.terms() {
            out.add_term(m, -a);
        }
        out
    }
}

impl<'a> Mul<&'a LefschetzPoly> for &'a LefschetzPoly {
    type Output = LefschetzPoly;

    fn mul(self, rhs: &'a LefschetzPoly) -> LefschetzPoly {
        let mut out = LefschetzPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &LefschetzPoly {
    type Output = LefschetzPoly;

    fn neg(self) -> LefschetzPoly {
        LefschetzPoly {
            coeffs: self.coeffs.iter().map(|(&m, a)| (m, -a)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LefschetzPoly> for LefschetzPoly {
            type Output = LefschetzPoly;

            fn $method(self, rhs: LefschetzPoly) -> LefschetzPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LefschetzPoly {
    type Output = LefschetzPoly;

    fn neg(self) -> LefschetzPoly {
        -&self
    }
}

/// Renders as `a_k*L^k + ... + a_1*L + a_0`, highest power first, with unit
/// coefficients elided and negative terms written with ` - `.
impl fmt::Display for LefschetzPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, a)) in self.terms().rev().enumerate() {
            let magnitude = a.abs();
            match (idx, a.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match m {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str("L")?;
                    if m > 1 {
                        write!(f, "^{m}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
