//! The exponential transform `f(t) -> prod_{k>=1} f(t^k)` on series with
//! constant term 1, its Möbius inverse `g(t) -> prod_{k>=1} g(t^k)^μ(k)`,
//! and an independent partition-number counter.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::series::{Coefficient, TruncatedSeries};

/// Values `μ(1), ..., μ(N)` of the Möbius function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<i8>,
}

impl MobiusTable {
    /// Linear sieve over `1..=n`.
    pub fn new(n: usize) -> Self {
        let mut values = vec![0i8; n + 1];
        let mut is_composite = vec![false; n + 1];
        let mut primes: Vec<usize> = Vec::new();
        if n >= 1 {
            values[1] = 1;
        }
        for i in 2..=n {
            if !is_composite[i] {
                primes.push(i);
                values[i] = -1;
            }
            for &p in &primes {
                let Some(ip) = i.checked_mul(p).filter(|&v| v <= n) else {
                    break;
                };
                is_composite[ip] = true;
                if i % p == 0 {
                    values[ip] = 0;
                    break;
                }
                values[ip] = -values[i];
            }
        }
        Self { values }
    }

    /// Largest `k` covered by the table.
    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `μ(k)`. Panics if `k` is 0 or beyond the table.
    pub fn get(&self, k: usize) -> i8 {
        assert!(k >= 1 && k <= self.len(), "μ({k}) outside table 1..={}", self.len());
        self.values[k]
    }

    /// `(k, μ(k))` for `k = 1..=N`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.values.iter().copied().enumerate().skip(1)
    }
}

pub fn mobius_table(n: usize) -> MobiusTable {
    MobiusTable::new(n)
}

fn require_constant_one<R: Coefficient>(f: &TruncatedSeries<R>) -> Result<()> {
    if f.constant_term().is_one() {
        Ok(())
    } else {
        Err(Error::ConstantTermNotOne(f.constant_term().to_string()))
    }
}

/// `prod_{k=1}^{N} f(t^k)` to order `min(N, precision(f))`; factors with
/// `k > N` are `1 mod t^(N+1)`.
pub fn exp_transform<R: Coefficient>(
    f: &TruncatedSeries<R>,
    precision: usize,
) -> Result<TruncatedSeries<R>> {
    require_constant_one(f)?;
    let n = precision.min(f.precision());
    let f = f.truncate(n);
    (1..=n).try_fold(TruncatedSeries::one(n), |acc, k| {
        Ok(acc.mul(&f.substitute_tk(k, n)?))
    })
}

/// `prod_{k=1}^{N} g(t^k)^μ(k)` to order `min(N, precision(g))`.
pub fn mobius_transform<R: Coefficient>(
    g: &TruncatedSeries<R>,
    precision: usize,
) -> Result<TruncatedSeries<R>> {
    require_constant_one(g)?;
    let n = precision.min(g.precision());
    let g = g.truncate(n);
    let g_inv = g.inverse()?;
    let mu = MobiusTable::new(n);
    let mut acc = TruncatedSeries::one(n);
    for (k, m) in mu.iter() {
        match m {
            1 => acc = acc.mul(&g.substitute_tk(k, n)?),
            -1 => acc = acc.mul(&g_inv.substitute_tk(k, n)?),
            _ => {}
        }
    }
    Ok(acc)
}

/// `p(0), ..., p(N)` by the "parts of size at most k" recurrence
/// `p[n] += p[n - k]`, run for `k = 1..=N`.
pub fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); n + 1];
    p[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let prev = p[total - part].clone();
            p[total] += prev;
        }
    }
    p
}
