//! Cyclotomic polynomials Φ_n and the prime-power discriminant closed form.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::arith::{divisors, is_prime, totient, PosNat};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

type Cache = RwLock<HashMap<u64, Arc<IntPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The n-th cyclotomic polynomial, by exact division of `X^n - 1` by every
/// `Φ_d` with `d | n`, `d < n`. Memoized for the life of the process.
pub fn cyclotomic_poly(n: PosNat) -> Arc<IntPoly> {
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&n.get()) {
        return Arc::clone(p);
    }
    let phi = Arc::new(compute(n));
    // A racing thread may have inserted the same value; either copy is fine.
    let mut guard = cache().write().expect("cyclotomic cache poisoned");
    Arc::clone(guard.entry(n.get()).or_insert(phi))
}

fn compute(n: PosNat) -> IntPoly {
    let nv = n.get();
    if nv == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    let mut acc = IntPoly::x_pow_minus_one(nv as usize);
    // Divide the largest proper divisors first: they strip the most degree
    // while the quotient is still long, which keeps the later divisions short.
    for d in divisors(n).into_iter().rev().skip(1) {
        let phi_d = cyclotomic_poly(PosNat::new(d).expect("divisor is positive"));
        acc = acc
            .div_exact_monic(&phi_d)
            .expect("Φ_d divides X^n - 1 for every d | n");
    }
    debug_assert_eq!(acc.degree(), Some(totient(n) as usize));
    acc
}

/// Closed form for the discriminant of `Q(ζ_{p^k})` in its power basis,
/// `(-1)^(φ(p^k)/2) · p^(p^(k-1) · ((p-1)k - 1))`, with `/` and `-` taken as
/// truncating natural-number operations (so `1/2 = 0` and `0 - 1 = 0`).
///
/// Proven for odd `p` with `k >= 1` and for `p = 2` with `k >= 2`; the value
/// at `(2, 1)` also matches the polynomial discriminant of `Φ_2`.
pub fn discr_prime_pow_formula(p: u64, k: u32) -> Result<BigInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("exponent k must be at least 1".into()));
    }
    let pk = PosNat::new(p.pow(k)).map_err(|_| Error::InvalidArgument("p^k overflow".into()))?;
    let sign_exp = totient(pk) / 2;
    let inner = ((p - 1) * k as u64).saturating_sub(1);
    let exp = p.pow(k - 1) * inner;
    let magnitude: BigInt = Pow::pow(BigInt::from(p), exp);
    Ok(if sign_exp % 2 == 1 { -magnitude } else { magnitude })
}

/// `X^n - 1` as the product of `Φ_d` over all divisors.
pub fn product_of_divisor_cyclotomics(n: PosNat) -> IntPoly {
    divisors(n)
        .into_iter()
        .fold(IntPoly::constant(BigInt::one()), |acc, d| {
            &acc * &cyclotomic_poly(PosNat::new(d).expect("positive"))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_discriminant;

    fn pn(n: u64) -> PosNat {
        PosNat::new(n).unwrap()
    }

    fn moebius_oracle(n: u64) -> Vec<i64> {
        to_i64(&crate::oracle::moebius_product(pn(n)))
    }

    fn to_i64(p: &IntPoly) -> Vec<i64> {
        p.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(*cyclotomic_poly(pn(1)), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(moebius_oracle(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(to_i64(&cyclotomic_poly(pn(5))), vec![1, 1, 1, 1, 1]);
        assert_eq!(moebius_oracle(6), vec![1, -1, 1]);
        assert_eq!(to_i64(&cyclotomic_poly(pn(6))), vec![1, -1, 1]);
        assert_eq!(moebius_oracle(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(to_i64(&cyclotomic_poly(pn(12))), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn first_non_binary_coefficient() {
        // Φ_105 is the first with a coefficient of absolute value 2
        let phi = cyclotomic_poly(pn(105));
        assert!(phi.coeffs().iter().any(|c| *c == BigInt::from(-2)));
        assert_eq!(to_i64(&phi), moebius_oracle(105));
    }

    #[test]
    fn matches_moebius_oracle_up_to_300() {
        for n in 1..=300 {
            assert_eq!(to_i64(&cyclotomic_poly(pn(n))), moebius_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn monic_degree_and_constant_term() {
        for n in 1..=300u64 {
            let phi = cyclotomic_poly(pn(n));
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(totient(pn(n)) as usize));
            if n >= 2 {
                assert_eq!(phi.coeff(0), BigInt::one());
            }
        }
    }

    #[test]
    fn formula_examples_against_polynomial_discriminant() {
        let cases = [(3, 1, -3i64), (5, 1, 125), (3, 2, -19683), (2, 2, -4), (2, 1, 1)];
        for (p, k, expected) in cases {
            let oracle = poly_discriminant(&cyclotomic_poly(pn(p.pow(k)))).unwrap();
            assert_eq!(oracle, BigInt::from(expected));
            assert_eq!(discr_prime_pow_formula(p, k).unwrap(), oracle, "({p}, {k})");
        }
    }

    #[test]
    fn formula_rejects_bad_input() {
        assert_eq!(discr_prime_pow_formula(9, 1), Err(Error::NotPrime(9)));
        assert!(discr_prime_pow_formula(5, 0).is_err());
    }

    #[test]
    fn formula_sign_pattern_for_odd_primes() {
        for p in [3u64, 5, 7, 11, 13, 17, 19] {
            for k in 1..=3u32 {
                let phi = totient(pn(p.pow(k)));
                let negative = discr_prime_pow_formula(p, k).unwrap() < BigInt::from(0);
                assert_eq!(negative, (phi / 2) % 2 == 1, "({p}, {k})");
            }
        }
    }

    #[test]
    fn concurrent_cache_access_is_consistent() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| (1..=120).map(|n| cyclotomic_poly(pn(n))).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for r in &results[1..] {
            assert_eq!(r, &results[0]);
        }
    }
}
