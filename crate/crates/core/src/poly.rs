//! Dense univariate polynomials over Z and Q.
//!
//! Coefficient vectors are stored low-to-high and trimmed so the highest
//! stored coefficient is nonzero. The zero polynomial is the empty vector and
//! has degree `None` (minus infinity).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::arith::{common_denominator, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// gcd of the coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|x| x / c).collect())
    }

    /// `f(X^k)`.
    pub fn compose_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Quotient of an exact division by a monic polynomial, or `None` if the
    /// divisor is not monic or leaves a remainder.
    pub fn div_exact_monic(&self, g: &IntPoly) -> Option<IntPoly> {
        if !g.is_monic() {
            return None;
        }
        let m = g.coeffs.len() - 1;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() <= m {
            return None;
        }
        div_exact_monic_small(&self.coeffs, &g.coeffs)
            .unwrap_or_else(|| div_exact_monic_big(&self.coeffs, &g.coeffs))
            .map(IntPoly::new)
    }

    /// Pseudo-remainder `prem(f, g)`: remainder of `lc(g)^(deg f - deg g + 1) f` by `g`.
    fn pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        let m = g.coeffs.len() - 1;
        let lc = g.coeffs[m].clone();
        let mut r = self.coeffs.clone();
        let mut steps = (r.len() - 1) as i64 - m as i64 + 1;
        while r.len() > m && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            let shift = top - m;
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                r[shift + j] -= &t * gj;
            }
            trim(&mut r);
            steps -= 1;
        }
        if steps > 0 {
            let f = Pow::pow(&lc, steps as u64);
            for c in r.iter_mut() {
                *c *= &f;
            }
        }
        IntPoly::new(r)
    }
}

/// i128 fast path; `None` means an overflow occurred and the caller should
/// retry with big integers.
fn div_exact_monic_small(f: &[BigInt], g: &[BigInt]) -> Option<Option<Vec<BigInt>>> {
    let mut rem: Vec<i128> = f.iter().map(|c| c.to_i64().map(i128::from)).collect::<Option<_>>()?;
    let gs: Vec<(usize, i128)> = g[..g.len() - 1]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| c.to_i64().map(|c| (j, i128::from(c))))
        .collect::<Option<_>>()?;
    let m = g.len() - 1;
    let qlen = rem.len() - m;
    let mut q = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let t = rem[i + m];
        if t == 0 {
            continue;
        }
        q[i] = t;
        for &(j, gj) in &gs {
            let prod = t.checked_mul(gj)?;
            rem[i + j] = rem[i + j].checked_sub(prod)?;
            if rem[i + j].unsigned_abs() > (1u128 << 100) {
                return None;
            }
        }
    }
    if rem[..m].iter().any(|&c| c != 0) {
        return Some(None);
    }
    Some(Some(q.into_iter().map(BigInt::from).collect()))
}

fn div_exact_monic_big(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = f.to_vec();
    let gs: Vec<(usize, &BigInt)> = g[..g.len() - 1]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let m = g.len() - 1;
    let qlen = rem.len() - m;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let t = std::mem::take(&mut rem[i + m]);
        if t.is_zero() {
            continue;
        }
        for &(j, gj) in &gs {
            rem[i + j] -= &t * gj;
        }
        q[i] = t;
    }
    rem[..m].iter().all(Zero::is_zero).then_some(q)
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses a low-to-high coefficient list such as `[-1,0,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [c0,c1,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(IntPoly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Splits into `(primitive integer polynomial, scale)` with
    /// `self = poly * scale`; the denominator is cleared, not the content.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let d = common_denominator(&self.coeffs);
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(d.clone())).to_integer())
            .collect();
        (IntPoly::new(ints), d)
    }

    fn scale(&self, c: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Returns `(g, s)` with `g = gcd(self, modulus)` made monic and
    /// `s * self ≡ g (mod modulus)`.
    pub fn ext_gcd_left(&self, modulus: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let (mut r0, mut r1) = (modulus.clone(), self.clone());
        let (mut s0, mut s1) = (RatPoly::zero(), RatPoly::new(vec![Rational::one()]));
        while !r1.is_zero() {
            let (q, r) = poly_divmod(&r0, &r1)?;
            let s2 = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        match r0.coeffs.last() {
            None => Err(Error::DivisionByZero),
            Some(lc) => {
                let inv = lc.recip();
                Ok((r0.scale(&inv), s0.scale(&inv)))
            }
        }
    }
}

impl std::ops::Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

/// Long division over Q: `f = q·g + r` with `deg r < deg g`.
pub fn poly_divmod(f: &RatPoly, g: &RatPoly) -> Result<(RatPoly, RatPoly)> {
    let m = g.degree().ok_or(Error::DivisionByZero)?;
    let mut r = f.coeffs.clone();
    if r.len() <= m {
        return Ok((RatPoly::zero(), f.clone()));
    }
    let lc_inv = g.coeffs[m].recip();
    let mut q = vec![Rational::zero(); r.len() - m];
    for i in (0..q.len()).rev() {
        let t = &r[i + m] * &lc_inv;
        if t.is_zero() {
            continue;
        }
        for (j, gj) in g.coeffs.iter().enumerate() {
            r[i + j] -= &t * gj;
        }
        q[i] = t;
    }
    r.truncate(m);
    Ok((RatPoly::new(q), RatPoly::new(r)))
}

/// Resultant over Z by the subresultant pseudo-remainder sequence
/// (fraction-free; all intermediate divisions are exact).
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::InvalidArgument("resultant of the zero polynomial".into()));
    };
    let (mut a, mut b, mut sign) = if df >= dg {
        (f.clone(), g.clone(), BigInt::one())
    } else {
        let s = if df * dg % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        (g.clone(), f.clone(), s)
    };
    let da = a.degree().unwrap_or(0);
    let db = b.degree().unwrap_or(0);
    if db == 0 {
        return Ok(sign * Pow::pow(&b.coeffs[0], da as u64));
    }

    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let t = Pow::pow(&ca, db as u64) * Pow::pow(&cb, da as u64);
    let mut g_s = BigInt::one();
    let mut h = BigInt::one();

    loop {
        let (deg_a, deg_b) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g_s * Pow::pow(&h, delta as u64);
        b = r.div_scalar_exact(&divisor);
        g_s = a.leading_coeff().cloned().unwrap_or_default();
        // h = g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            Pow::pow(&g_s, delta as u64) / Pow::pow(&h, (delta - 1) as u64)
        };
        if b.degree() == Some(0) {
            let deg_a = a.degree().unwrap_or(0);
            let lb = &b.coeffs[0];
            // h = lc(B)^deg_a / h^(deg_a - 1)
            let h_final = if deg_a == 0 {
                h.clone()
            } else {
                Pow::pow(lb, deg_a as u64) / Pow::pow(&h, (deg_a - 1) as u64)
            };
            return Ok(sign * t * h_final);
        }
    }
}

/// Discriminant of a monic polynomial of degree `d >= 1`:
/// `(-1)^(d(d-1)/2) Res(f, f')`.
pub fn poly_discriminant(f: &IntPoly) -> Result<BigInt> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(
                "discriminant needs a polynomial of degree >= 1".into(),
            ))
        }
    };
    if !f.is_monic() {
        return Err(Error::InvalidArgument("discriminant needs a monic polynomial".into()));
    }
    let res = resultant(f, &f.derivative())?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -res } else { res })
}

pub fn poly_eval(f: &IntPoly, x: &BigInt) -> BigInt {
    f.eval(x)
}
