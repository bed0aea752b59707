//! Exact Bernoulli numbers and the Bernoulli-numerator regularity test.
//!
//! A prime `p` is classified irregular when it divides the numerator of some
//! `B_k` with `k` even and `2 <= k <= p - 3`. This stands in for the class
//! number definition, to which it is classically equivalent.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{abs_numer_mod, divisors, is_prime, PosNat, Rational};
use crate::error::{Error, Result};

/// Memoized `B_0, B_1, …` with `B_1 = -1/2`. Append-only.
#[derive(Debug, Default)]
pub struct BernoulliTable {
    values: RwLock<Vec<Rational>>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table.
    pub fn global() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(BernoulliTable::new)
    }

    pub fn get(&self, m: usize) -> Rational {
        if let Some(b) = self.values.read().expect("bernoulli table poisoned").get(m) {
            return b.clone();
        }
        let mut values = self.values.write().expect("bernoulli table poisoned");
        while values.len() <= m {
            let next = next_bernoulli(&values);
            values.push(next);
        }
        values[m].clone()
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("bernoulli table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `B_m = -(1/(m+1)) Σ_{j<m} C(m+1, j) B_j` given `B_0..B_{m-1}`.
fn next_bernoulli(prev: &[Rational]) -> Rational {
    let m = prev.len() as u64;
    if m == 0 {
        return Rational::one();
    }
    if m >= 3 && m % 2 == 1 {
        return Rational::zero();
    }
    let mut sum = Rational::zero();
    let mut c = BigInt::one(); // C(m+1, j)
    for (j, b) in prev.iter().enumerate() {
        if !b.is_zero() {
            sum += b * Rational::from_integer(c.clone());
        }
        c = c * (m + 1 - j as u64) / (j as u64 + 1);
    }
    -sum / Rational::from_integer(BigInt::from(m + 1))
}

pub fn bernoulli(m: usize) -> Rational {
    BernoulliTable::global().get(m)
}

/// Denominator of `B_m` for even `m >= 2`: the product of primes `q` with
/// `(q - 1) | m`.
pub fn vsc_denominator(m: u64) -> Result<BigInt> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "von Staudt-Clausen denominator needs an even m >= 2, got {m}"
        )));
    }
    let m = PosNat::new(m)?;
    Ok(divisors(m)
        .into_iter()
        .map(|d| d + 1)
        .filter(|&q| is_prime(q))
        .fold(BigInt::one(), |acc, q| acc * q))
}

/// An irregular pair `(p, k)`: `p | numerator(B_k)`, `k` even, `2 <= k <= p - 3`.
pub type IrregularPair = (u64, u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub p: u64,
    pub regular: bool,
    pub pairs: Vec<IrregularPair>,
}

pub fn irregular_pairs(p: u64) -> Result<Vec<IrregularPair>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::InvalidArgument(format!(
            "irregular pairs need a prime p >= 5, got {p}"
        )));
    }
    let table = BernoulliTable::global();
    Ok((2..=p - 3)
        .step_by(2)
        .filter(|&k| abs_numer_mod(&table.get(k as usize), p) == 0)
        .map(|k| (p, k))
        .collect())
}

pub fn is_regular_prime(p: u64) -> Result<RegularityReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pairs = if p < 5 { Vec::new() } else { irregular_pairs(p)? };
    Ok(RegularityReport {
        p,
        regular: pairs.is_empty(),
        pairs,
    })
}
