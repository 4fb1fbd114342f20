//! Motivic and categorical zeta-functions of classes in `Z[L]`, the dg
//! motivic measure, and verifiers for the identities relating them.
//!
//! The dg measure is modelled as evaluation at `L = 1`: it sends every
//! `[A^k]` to 1 and is the unique ring map `Z[L] -> Z` doing so. Categorical
//! zeta-functions are computed on that integer image, so every identity below
//! is checked as an identity of integer (or `Z[L]`) power series.

use std::fmt;

use num_bigint::BigInt;

use crate::lambda::{sigma_series, sigma_series_categorical, LambdaStructure};
use crate::poly::LefschetzPoly;
use crate::series::{Coefficient, IntSeries, PolySeries, TruncatedSeries};
use crate::transforms::partition_numbers;

/// `Z_mot(c, t) = sum [Sym^n c] t^n`.
pub fn zeta_motivic(c: &LefschetzPoly, precision: usize) -> PolySeries {
    sigma_series(c, precision)
}

/// The dg motivic measure on `Z[L]`: `L -> 1`.
pub fn mu_dg(c: &LefschetzPoly) -> BigInt {
    c.eval_one()
}

/// `Z_cat(mu_dg(c), t) = P(t)^mu_dg(c)`.
pub fn zeta_categorical(c: &LefschetzPoly, precision: usize) -> IntSeries {
    sigma_series_categorical(&mu_dg(c), precision)
}

/// `prod_{k>=1} mu_dg(Z_mot(c, t^k))`, with `mu_dg` applied coefficient-wise.
///
/// Only `k <= N` contributes, and the k-th factor needs `Z_mot` to order
/// `floor(N/k)` only.
pub fn zeta_theorem_rhs(c: &LefschetzPoly, precision: usize) -> IntSeries {
    (1..=precision).fold(IntSeries::one(precision), |acc, k| {
        let factor = zeta_motivic(c, precision / k)
            .specialize()
            .substitute_tk(k, precision)
            .expect("k >= 1");
        acc.mul(&factor)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `Z_cat(mu_dg X) = prod_k mu_dg Z_mot(X, t^k)`.
    Theorem,
    /// `Z_mot(c + d) = Z_mot(c) Z_mot(d)`.
    MultKap,
    /// `Z_cat(c + d) = Z_cat(c) Z_cat(d)`.
    MultCat,
    /// `Z_cat(X x P^n) = Z_cat(X)^(n+1)`.
    PnPower,
    /// `Z_cat(pt)` is the partition generating function.
    PointPartition,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Self::Theorem => "theorem",
            Self::MultKap => "mult_kap",
            Self::MultCat => "mult_cat",
            Self::PnPower => "pn_power",
            Self::PointPartition => "point_partition",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First coefficient at which the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of comparing both sides of an identity coefficient by coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub precision: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn compare<R: Coefficient>(
        identity: Identity,
        lhs: &TruncatedSeries<R>,
        rhs: &TruncatedSeries<R>,
    ) -> Self {
        let precision = lhs.precision().min(rhs.precision());
        let mismatch = lhs.first_difference(rhs).map(|(index, l, r)| Mismatch {
            index,
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
        Self {
            identity,
            precision,
            mismatch,
        }
    }

    pub fn verified(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// `VERIFIED (order N)` or `FAILED at t^i: lhs=..., rhs=...`.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "VERIFIED (order {})", self.precision),
            Some(m) => write!(f, "FAILED at t^{}: lhs={}, rhs={}", m.index, m.lhs, m.rhs),
        }
    }
}

/// Compares `Z_cat(c)` against `prod_k mu_dg(Z_mot(c, t^k))`. The two sides
/// share no code beyond series multiplication: the left goes through the
/// categorical λ-structure, the right through the motivic zeta-function.
pub fn verify_theorem(c: &LefschetzPoly, precision: usize) -> VerificationReport {
    verify_theorem_with(LambdaStructure::Categorical, c, precision)
}

/// The same comparison with the left side computed as `σ_t(mu_dg c)` under
/// the given structure. Under [`LambdaStructure::Geometric`] this is
/// `mu_dg(Z_mot(c))`, which fails as soon as `mu_dg(c) != 0`: the measure
/// does not respect the λ-structures.
pub fn verify_theorem_with(
    structure: LambdaStructure,
    c: &LefschetzPoly,
    precision: usize,
) -> VerificationReport {
    VerificationReport::compare(
        Identity::Theorem,
        &structure.sigma_integer(&mu_dg(c), precision),
        &zeta_theorem_rhs(c, precision),
    )
}

pub fn verify_mult_kap(c: &LefschetzPoly, d: &LefschetzPoly, precision: usize) -> VerificationReport {
    let lhs = zeta_motivic(&(c + d), precision);
    let rhs = zeta_motivic(c, precision).mul(&zeta_motivic(d, precision));
    VerificationReport::compare(Identity::MultKap, &lhs, &rhs)
}

pub fn verify_mult_cat(c: &LefschetzPoly, d: &LefschetzPoly, precision: usize) -> VerificationReport {
    let lhs = zeta_categorical(&(c + d), precision);
    let rhs = zeta_categorical(c, precision).mul(&zeta_categorical(d, precision));
    VerificationReport::compare(Identity::MultCat, &lhs, &rhs)
}

/// Compares `Z_cat(c [P^n])` with `Z_cat(c)^(n+1)`.
pub fn verify_pn_power(c: &LefschetzPoly, n: u32, precision: usize) -> VerificationReport {
    let lhs = zeta_categorical(&(c * &LefschetzPoly::projective(n)), precision);
    let rhs = zeta_categorical(c, precision)
        .pow(&BigInt::from(n + 1))
        .expect("positive exponent");
    VerificationReport::compare(Identity::PnPower, &lhs, &rhs)
}

/// Compares `Z_cat(pt)` with partition numbers counted directly.
pub fn verify_point_partition(precision: usize) -> VerificationReport {
    let lhs = zeta_categorical(&LefschetzPoly::one(), precision);
    let rhs = IntSeries::new(partition_numbers(precision), precision);
    VerificationReport::compare(Identity::PointPartition, &lhs, &rhs)
}
