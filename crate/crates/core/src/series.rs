//! Truncated formal power series in `t` over `Z` or `Z[L]`.
//!
//! A series of precision `N` is known modulo `t^(N+1)` and stores exactly
//! `N + 1` coefficients. Binary operations return the smaller of the two
//! precisions; nothing is ever extended implicitly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::LefschetzPoly;

/// Commutative coefficient ring for [`TruncatedSeries`].
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self);

    /// Whether the rendered value needs no parentheses in front of `*t^i`.
    fn is_monomial(&self) -> bool;
}

impl Coefficient for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn is_monomial(&self) -> bool {
        true
    }
}

impl Zero for LefschetzPoly {
    fn zero() -> Self {
        LefschetzPoly::zero()
    }

    fn is_zero(&self) -> bool {
        LefschetzPoly::is_zero(self)
    }
}

impl One for LefschetzPoly {
    fn one() -> Self {
        LefschetzPoly::one()
    }
}

impl Coefficient for LefschetzPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }

    fn is_monomial(&self) -> bool {
        LefschetzPoly::is_monomial(self)
    }
}

/// `c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

pub type IntSeries = TruncatedSeries<BigInt>;
pub type PolySeries = TruncatedSeries<LefschetzPoly>;

impl<R: Coefficient> TruncatedSeries<R> {
    /// Series of the given precision; missing coefficients are zero and
    /// coefficients past `t^precision` are dropped.
    pub fn new(mut coeffs: Vec<R>, precision: usize) -> Self {
        coeffs.resize(precision + 1, R::zero());
        Self { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(R::one(), precision)
    }

    pub fn constant(c: R, precision: usize) -> Self {
        Self::new(vec![c], precision)
    }

    /// `c * t^i` (zero if `i` exceeds the precision).
    pub fn monomial(c: R, i: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if i <= precision {
            s.coeffs[i] = c;
        }
        s
    }

    /// `N`: the series is known modulo `t^(N+1)`.
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `t^i`. Panics if `i` exceeds the precision.
    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    /// Drops information beyond `t^precision`; a no-op if already coarser.
    pub fn truncate(&self, precision: usize) -> Self {
        let n = precision.min(self.precision());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        let coeffs = self.coeffs[..=n]
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.add_assign_ref(b);
                c
            })
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }

    /// Cauchy product truncated at the smaller precision.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let c0_is_unit = c0.is_one() || (-c0.clone()).is_one();
        if !c0_is_unit {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        // c0 is its own inverse.
        let n = self.precision();
        let mut inv: Vec<R> = Vec::with_capacity(n + 1);
        inv.push(c0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for i in 1..=k {
                let f = &self.coeffs[i];
                if !f.is_zero() {
                    acc.add_assign_ref(&f.mul_ref(&inv[k - i]));
                }
            }
            inv.push(-acc.mul_ref(c0));
        }
        Ok(Self { coeffs: inv })
    }

    /// `self^e` by binary exponentiation; negative exponents go through
    /// [`inverse`](Self::inverse) and need a unit constant term.
    pub fn pow(&self, e: &BigInt) -> Result<Self> {
        let n = self.precision();
        if e.is_zero() {
            return Ok(Self::one(n));
        }
        let mut base = if e.is_negative() {
            self.inverse()?
        } else {
            self.clone()
        };
        let magnitude = e.magnitude();
        let bits = magnitude.bits();
        let mut acc = Self::one(n);
        for i in 0..bits {
            if magnitude.bit(i) {
                acc = acc.mul(&base);
            }
            if i + 1 < bits {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        self.pow(&BigInt::from(e))
    }

    /// `f(t^k)`. The result is reported to `min(order, k(M+1) - 1)` where `M`
    /// is the precision of `self`, since that is how far `f(t^k)` is known.
    pub fn substitute_tk(&self, k: usize, order: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroIndex { op: "substitution t -> t^k" });
        }
        let known = k
            .checked_mul(self.precision() + 1)
            .map_or(usize::MAX, |v| v - 1);
        let n = order.min(known);
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate().take(n / k + 1) {
            out.coeffs[i * k] = c.clone();
        }
        Ok(out)
    }

    /// `f(-t)`.
    pub fn negate_variable(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Applies a ring map coefficient-wise, keeping the precision.
    pub fn map_coeffs<S, F>(&self, f: F) -> TruncatedSeries<S>
    where
        S: Coefficient,
        F: Fn(&R) -> S,
    {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Index and values of the first coefficient where the two series
    /// differ, compared up to the smaller precision.
    pub fn first_difference<'a>(&'a self, rhs: &'a Self) -> Option<(usize, &'a R, &'a R)> {
        self.coeffs
            .iter()
            .zip(&rhs.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a, b))
    }
}

impl PolySeries {
    /// Applies the evaluation `L -> 1` to every coefficient.
    pub fn specialize(&self) -> IntSeries {
        self.map_coeffs(LefschetzPoly::eval_one)
    }
}

impl IntSeries {
    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I, precision: usize) -> Self {
        Self::new(coeffs.into_iter().map(BigInt::from).collect(), precision)
    }
}

macro_rules! series_binop {
    ($tr:ident, $method:ident) => {
        impl<'a, R: Coefficient> $tr<&'a TruncatedSeries<R>> for &'a TruncatedSeries<R> {
            type Output = TruncatedSeries<R>;

            fn $method(self, rhs: &'a TruncatedSeries<R>) -> TruncatedSeries<R> {
                TruncatedSeries::$method(self, rhs)
            }
        }
    };
}

series_binop!(Add, add);
series_binop!(Sub, sub);
series_binop!(Mul, mul);

/// `c0 + c1*t + c2*t^2 + ... + O(t^(N+1))`; zero coefficients are omitted
/// and non-monomial coefficients are parenthesised.
impl<R: Coefficient> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if c.is_monomial() => (true, rest.to_string()),
                _ if c.is_monomial() => (false, text),
                _ => (false, format!("({text})")),
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let power = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            match (i, body.as_str()) {
                (0, _) => f.write_str(&body)?,
                (_, "1") => f.write_str(&power)?,
                _ => write!(f, "{body}*{power}")?,
            }
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(t^{})", self.precision() + 1)
    }
}
