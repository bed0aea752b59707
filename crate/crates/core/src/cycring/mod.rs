//! Arithmetic in Q(ζ_n) in the power basis `1, ζ, …, ζ^(φ(n)-1)`.
//!
//! Every [`CycElt`] is kept reduced modulo Φ_n, so equality is coefficient
//! equality. Z[ζ_n] is not a separate type: membership is the predicate
//! [`CycElt::is_integral`]. For prime-power `n` this is exactly the ring of
//! integers; for other `n` it only means "member of Z[ζ_n]".

mod galois;
mod units;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{all_integral, common_denominator, totient, PosNat, Rational};
use crate::cyclotomic::cyclotomic_poly;
use crate::error::{Error, Result};

pub use galois::{conj, galois_apply, norm, trace, GaloisIndex};
pub use units::{
    decompose_unit, factor_sum_pth_powers, fold_product, inverse, is_real, is_root_of_unity,
    is_unit, UnitDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycElt {
    n: PosNat,
    coeffs: Vec<Rational>,
}

impl CycElt {
    /// Canonical representative of `Σ raw_i ζ^i`.
    pub fn reduce(n: PosNat, raw: &[Rational]) -> CycElt {
        let den = common_denominator(raw);
        let ints = raw
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        CycElt::from_scaled(n, ints, &den)
    }

    pub fn from_i64(n: PosNat, raw: &[i64]) -> CycElt {
        CycElt::from_scaled(n, raw.iter().map(|&c| BigInt::from(c)).collect(), &BigInt::one())
    }

    pub fn scalar(n: PosNat, c: Rational) -> CycElt {
        let mut coeffs = vec![Rational::zero(); totient(n) as usize];
        coeffs[0] = c;
        CycElt { n, coeffs }
    }

    pub fn zero(n: PosNat) -> CycElt {
        CycElt::scalar(n, Rational::zero())
    }

    pub fn one(n: PosNat) -> CycElt {
        CycElt::scalar(n, Rational::one())
    }

    /// `ζ^(j mod n)`.
    pub fn zeta_pow(n: PosNat, j: i64) -> CycElt {
        let e = j.mod_floor(&(n.get() as i64)) as usize;
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        CycElt::from_scaled(n, raw, &BigInt::one())
    }

    /// `(Σ ints_i ζ^i) / den`, reduced.
    pub(crate) fn from_scaled(n: PosNat, ints: Vec<BigInt>, den: &BigInt) -> CycElt {
        let reduced = reduce_ints(n, ints);
        let coeffs = reduced
            .into_iter()
            .map(|c| Rational::new(c, den.clone()))
            .collect();
        CycElt { n, coeffs }
    }

    /// Numerators over the least common denominator.
    pub(crate) fn split(&self) -> (Vec<BigInt>, BigInt) {
        let den = common_denominator(&self.coeffs);
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        (ints, den)
    }

    pub fn n(&self) -> PosNat {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// All power-basis coefficients are integers, i.e. the element lies in Z[ζ_n].
    pub fn is_integral(&self) -> bool {
        all_integral(&self.coeffs)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_scalar(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &CycElt) -> Result<()> {
        if self.n != other.n {
            Err(Error::ConductorMismatch(self.n.get(), other.n.get()))
        } else {
            Ok(())
        }
    }
}

/// Reduces an integer coefficient vector modulo Φ_n, returning exactly φ(n) entries.
fn reduce_ints(n: PosNat, mut v: Vec<BigInt>) -> Vec<BigInt> {
    let nv = n.get() as usize;
    let phi_deg = totient(n) as usize;
    // ζ^n = 1
    if v.len() > nv {
        let (low, high) = v.split_at_mut(nv);
        for (i, c) in high.iter_mut().enumerate() {
            low[i % nv] += std::mem::take(c);
        }
        v.truncate(nv);
    }
    if v.len() > phi_deg {
        let phi = cyclotomic_poly(n);
        let terms: Vec<(usize, &BigInt)> = phi.coeffs()[..phi_deg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for top in (phi_deg..v.len()).rev() {
            let t = std::mem::take(&mut v[top]);
            if t.is_zero() {
                continue;
            }
            let shift = top - phi_deg;
            for &(j, c) in &terms {
                v[shift + j] -= &t * c;
            }
        }
    }
    v.resize(phi_deg, BigInt::zero());
    v
}

pub fn cyc_add(a: &CycElt, b: &CycElt) -> Result<CycElt> {
    a.check_same(b)?;
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
    Ok(CycElt { n: a.n, coeffs })
}

pub fn cyc_sub(a: &CycElt, b: &CycElt) -> Result<CycElt> {
    a.check_same(b)?;
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
    Ok(CycElt { n: a.n, coeffs })
}

pub fn cyc_mul(a: &CycElt, b: &CycElt) -> Result<CycElt> {
    a.check_same(b)?;
    let (ai, ad) = a.split();
    let (bi, bd) = b.split();
    let mut prod = vec![BigInt::zero(); ai.len() + bi.len() - 1];
    for (i, x) in ai.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in bi.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    Ok(CycElt::from_scaled(a.n, prod, &(ad * bd)))
}

/// `a^e`; negative exponents go through [`inverse`] and fail on zero.
pub fn cyc_pow(a: &CycElt, e: i64) -> Result<CycElt> {
    let base = if e < 0 { inverse(a)? } else { a.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = CycElt::one(a.n);
    let mut sq = base;
    while k > 0 {
        if k & 1 == 1 {
            acc = cyc_mul(&acc, &sq)?;
        }
        k >>= 1;
        if k > 0 {
            sq = cyc_mul(&sq, &sq)?;
        }
    }
    Ok(acc)
}

impl std::ops::Neg for &CycElt {
    type Output = CycElt;
    fn neg(self) -> CycElt {
        CycElt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.n)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for CycElt {
    type Err = Error;

    /// Parses `n:[c0,c1,...]`; the list may have any length and is reduced.
    fn from_str(s: &str) -> Result<Self> {
        let (n, list) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected n:[c0,c1,...], got {s:?}")))?;
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad conductor {n:?}")))?;
        let n = PosNat::new(n).map_err(|_| Error::Parse("conductor must be positive".into()))?;
        let inner = list
            .trim()
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got {list:?}")))?;
        let raw = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?
        };
        Ok(CycElt::reduce(n, &raw))
    }
}
