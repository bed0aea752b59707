//! Integer and rational foundations: the `Rational` carrier, `PosNat`, and
//! the elementary arithmetic functions (totient, Möbius, binomials, primes).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always reduced with a positive denominator.
pub type Rational = BigRational;

/// A positive natural number; the conductor `n` of `ζ_n` is never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosNat(u64);

impl PosNat {
    pub fn new(value: u64) -> Result<Self> {
        if value == 0 {
            Err(Error::InvalidArgument("expected a positive integer, got 0".into()))
        } else {
            Ok(PosNat(value))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for PosNat {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        PosNat::new(value)
    }
}

impl fmt::Display for PosNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Builds the reduced rational `num/den`.
pub fn rat_normalize(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub fn rat_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Prime factorization by trial division, as `(prime, exponent)` ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            let mut e = 0;
            while n.is_multiple_of(q) {
                n /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut q = 3u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

/// Primes `p <= limit`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut sieve = vec![true; limit + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= limit {
        if sieve[i] {
            for j in (i * i..=limit).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: PosNat) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (q, e) in factorize(n.get()) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= q;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient φ(n).
pub fn totient(n: PosNat) -> u64 {
    factorize(n.get())
        .into_iter()
        .fold(1, |acc, (q, e)| acc * (q - 1) * q.pow(e - 1))
}

/// Möbius function μ(n).
pub fn moebius(n: PosNat) -> i32 {
    let factors = factorize(n.get());
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Binomial coefficient C(n, k); zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp mod modulus` on machine words.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Image of a rational in Z/p. `None` when p divides the denominator.
pub fn rat_mod_prime(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    let num = r.numer().mod_floor(&pb).to_u64()?;
    // p prime, so den^(p-2) is the inverse
    Some(num * mod_pow(den, p - 2, p) % p)
}

/// Whether every coefficient is an integer.
pub fn all_integral(coeffs: &[Rational]) -> bool {
    coeffs.iter().all(|c| c.is_integer())
}

/// Least common multiple of all denominators.
pub fn common_denominator(coeffs: &[Rational]) -> BigInt {
    coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

pub(crate) fn abs_numer_mod(r: &Rational, p: u64) -> u64 {
    (r.numer().abs() % BigInt::from(p)).to_u64().unwrap_or(0)
}
