use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{conj, cyc_mul, cyc_pow, norm, CycElt};
use crate::arith::{divisors, is_prime, PosNat, Rational};
use crate::cyclotomic::cyclotomic_poly;
use crate::error::{Error, Result};
use crate::poly::{poly_divmod, RatPoly};

/// `u = x · ζ^m` with `x` a real unit and `m ∈ [0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitDecomposition {
    pub x: CycElt,
    pub m: u64,
}

/// Multiplicative inverse in Q(ζ_n), via the extended Euclidean algorithm
/// of the coefficient polynomial against Φ_n over Q.
pub fn inverse(a: &CycElt) -> Result<CycElt> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let phi = cyclotomic_poly(a.n).to_rat();
    let poly = RatPoly::new(a.coeffs.clone());
    let (g, s) = poly.ext_gcd_left(&phi)?;
    if g.degree() != Some(0) {
        return Err(Error::Invariant(format!(
            "gcd of {a} with Φ_{} is not constant",
            a.n
        )));
    }
    let (_, s) = poly_divmod(&s, &phi)?;
    let inv = CycElt::reduce(a.n, s.coeffs());
    if !cyc_mul(a, &inv)?.is_one() {
        return Err(Error::Invariant(format!("inverse of {a} failed to verify")));
    }
    Ok(inv)
}

/// Unit test in Z[ζ_n]: integral coefficients and norm ±1.
pub fn is_unit(a: &CycElt) -> Result<bool> {
    if !a.is_integral() {
        return Err(Error::NotIntegral);
    }
    Ok(norm(a).abs().is_one())
}

/// The multiplicative order of `a` if it is a root of unity. Every root of
/// unity in Q(ζ_n) has order dividing `2n`, so only those divisors are tried.
pub fn is_root_of_unity(a: &CycElt) -> Option<u64> {
    if a.is_zero() || !norm(a).abs().is_one() {
        return None;
    }
    let two_n = PosNat::new(2 * a.n.get()).expect("positive");
    divisors(two_n)
        .into_iter()
        .find(|&m| cyc_pow(a, m as i64).is_ok_and(|v| v.is_one()))
}

/// Fixed by complex conjugation.
pub fn is_real(a: &CycElt) -> bool {
    conj(a) == *a
}

fn require_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        Err(Error::NotPrime(p))
    } else if p == 2 {
        Err(Error::OddPrimeRequired(p))
    } else {
        Ok(())
    }
}

/// Writes a unit of Z[ζ_p] as `x · ζ^m` with `x` real.
///
/// `w = u / conj(u)` is a root of unity of the form `ζ^e` (for odd `p` the
/// form `-ζ^e` cannot occur), and `m` solves `2m ≡ e (mod p)`. All
/// postconditions are re-checked before returning.
pub fn decompose_unit(u: &CycElt, p: u64) -> Result<UnitDecomposition> {
    require_odd_prime(p)?;
    if u.n.get() != p {
        return Err(Error::ConductorMismatch(u.n.get(), p));
    }
    if !is_unit(u)? {
        return Err(Error::NotAUnit);
    }
    let n = u.n;
    let w = cyc_mul(u, &inverse(&conj(u))?)?;
    let mut exponent = None;
    for e in 0..p {
        let z = CycElt::zeta_pow(n, e as i64);
        if w == z {
            exponent = Some(e);
            break;
        }
        if w == -&z {
            return Err(Error::DecompositionImpossible(e));
        }
    }
    let e = exponent.ok_or_else(|| {
        Error::Invariant(format!("u / conj(u) = {w} is not a root of unity"))
    })?;
    let m = e * (p + 1) / 2 % p;
    let x = cyc_mul(u, &CycElt::zeta_pow(n, -(m as i64)))?;

    if !is_real(&x) {
        return Err(Error::Invariant(format!("{x} is not real")));
    }
    if !is_unit(&x)? {
        return Err(Error::Invariant(format!("{x} is not a unit")));
    }
    if cyc_mul(&x, &CycElt::zeta_pow(n, m as i64))? != *u {
        return Err(Error::Invariant("x·ζ^m does not reconstruct u".into()));
    }
    Ok(UnitDecomposition { x, m })
}

/// The `p` factors `x + ζ^i y`, `i = 0..p`, of `x^p + y^p` in Z[ζ_p].
pub fn factor_sum_pth_powers(x: &BigInt, y: &BigInt, p: u64) -> Result<Vec<CycElt>> {
    require_odd_prime(p)?;
    let n = PosNat::new(p).expect("prime is positive");
    let xs = CycElt::scalar(n, Rational::from_integer(x.clone()));
    (0..p)
        .map(|i| {
            let yz = cyc_mul(
                &CycElt::scalar(n, Rational::from_integer(y.clone())),
                &CycElt::zeta_pow(n, i as i64),
            )?;
            super::cyc_add(&xs, &yz)
        })
        .collect()
}

/// Left-to-right product of a nonempty list of elements.
pub fn fold_product(factors: &[CycElt]) -> Result<CycElt> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| cyc_mul(&acc, f))
}
