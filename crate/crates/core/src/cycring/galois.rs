use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::{cyc_add, CycElt};
use crate::arith::{totient, PosNat, Rational};
use crate::cyclotomic::cyclotomic_poly;
use crate::error::{Error, Result};
use crate::poly::{resultant, IntPoly};

/// The automorphism σ_k of Q(ζ_n) sending ζ to ζ^k, with `gcd(k, n) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaloisIndex {
    n: PosNat,
    k: u64,
}

impl GaloisIndex {
    pub fn new(n: PosNat, k: i64) -> Result<Self> {
        let k = k.mod_floor(&(n.get() as i64)) as u64;
        if k.gcd(&n.get()) != 1 {
            return Err(Error::InvalidArgument(format!(
                "gcd({k}, {n}) != 1, not a Galois index"
            )));
        }
        Ok(GaloisIndex { n, k })
    }

    /// Complex conjugation σ_{-1}.
    pub fn conjugation(n: PosNat) -> Self {
        GaloisIndex::new(n, -1).expect("-1 is a unit mod n")
    }

    /// All of Gal(Q(ζ_n)/Q), ordered by `k`.
    pub fn all(n: PosNat) -> impl Iterator<Item = GaloisIndex> {
        let nv = n.get();
        (0..nv.max(1))
            .filter(move |k| k.gcd(&nv) == 1)
            .map(move |k| GaloisIndex { n, k })
    }

    pub fn n(self) -> PosNat {
        self.n
    }

    pub fn k(self) -> u64 {
        self.k
    }

    /// σ_j ∘ σ_k = σ_{jk}.
    pub fn compose(self, other: GaloisIndex) -> Result<GaloisIndex> {
        if self.n != other.n {
            return Err(Error::ConductorMismatch(self.n.get(), other.n.get()));
        }
        let k = (self.k as u128 * other.k as u128 % self.n.get() as u128) as u64;
        Ok(GaloisIndex { n: self.n, k })
    }
}

pub fn galois_apply(s: GaloisIndex, a: &CycElt) -> Result<CycElt> {
    if s.n != a.n {
        return Err(Error::ConductorMismatch(s.n.get(), a.n.get()));
    }
    let nv = a.n.get() as usize;
    let (ints, den) = a.split();
    let mut raw = vec![BigInt::zero(); nv];
    for (i, c) in ints.into_iter().enumerate() {
        let idx = (i as u128 * s.k as u128 % nv as u128) as usize;
        raw[idx] += c;
    }
    Ok(CycElt::from_scaled(a.n, raw, &den))
}

pub fn conj(a: &CycElt) -> CycElt {
    galois_apply(GaloisIndex::conjugation(a.n), a).expect("same conductor")
}

/// Field norm to Q, as `Res(Φ_n, A)` for the coefficient polynomial `A`.
pub fn norm(a: &CycElt) -> Rational {
    if a.is_zero() {
        return Rational::zero();
    }
    let (ints, den) = a.split();
    let phi = cyclotomic_poly(a.n);
    // Φ_n is monic, so Res(Φ_n, A/d) = Res(Φ_n, A) / d^φ(n)
    let res = resultant(&phi, &IntPoly::new(ints)).expect("both polynomials nonzero");
    let scale: BigInt = Pow::pow(den, totient(a.n));
    BigRational::new(res, scale)
}

/// Field trace to Q, as the sum of all Galois conjugates.
pub fn trace(a: &CycElt) -> Result<Rational> {
    let mut acc = CycElt::zero(a.n);
    for s in GaloisIndex::all(a.n) {
        acc = cyc_add(&acc, &galois_apply(s, a)?)?;
    }
    acc.as_scalar().cloned().ok_or_else(|| {
        Error::Invariant(format!("trace of {a} is not rational: {acc}"))
    })
}
