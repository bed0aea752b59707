//! Independent reference computations used by the test suites.
//!
//! Each routine takes a different algebraic route from the production code
//! it is compared against: Φ_n from the Möbius product instead of recursive
//! division, norms from the product of conjugates instead of a resultant,
//! traces from the multiplication matrix instead of the conjugate sum.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{divisors, moebius, PosNat, Rational};
use crate::cycring::{cyc_mul, galois_apply, CycElt, GaloisIndex};
use crate::poly::IntPoly;

/// Φ_n as ∏_{d|n} (X^(n/d) - 1)^μ(d): multiply by the μ = +1 binomials, then
/// divide out the μ = -1 binomials one at a time.
pub fn moebius_product(n: PosNat) -> IntPoly {
    let mut num = vec![BigInt::one()];
    let mut den = Vec::new();
    for d in divisors(n) {
        let k = (n.get() / d) as usize;
        match moebius(PosNat::new(d).expect("positive")) {
            1 => {
                let mut next = vec![BigInt::zero(); num.len() + k];
                for (i, c) in num.iter().enumerate() {
                    next[i + k] += c;
                    next[i] -= c;
                }
                num = next;
            }
            -1 => den.push(k),
            _ => {}
        }
    }
    for k in den {
        // f = q (X^k - 1): peel q off from the top
        let mut rem = num;
        let mut q = vec![BigInt::zero(); rem.len() - k];
        for i in (0..q.len()).rev() {
            let t = std::mem::take(&mut rem[i + k]);
            rem[i] += &t;
            q[i] = t;
        }
        assert!(rem.iter().all(Zero::is_zero), "X^{k} - 1 does not divide");
        num = q;
    }
    IntPoly::new(num)
}

/// Norm as the product of all Galois conjugates, computed in the ring.
pub fn conjugate_product_norm(a: &CycElt) -> Rational {
    let prod = GaloisIndex::all(a.n()).fold(CycElt::one(a.n()), |acc, s| {
        cyc_mul(&acc, &galois_apply(s, a).expect("same conductor")).expect("same conductor")
    });
    prod.as_scalar()
        .cloned()
        .expect("product of all conjugates is rational")
}

/// Trace of the matrix of multiplication by `a` in the power basis.
pub fn multiplication_matrix_trace(a: &CycElt) -> Rational {
    let dim = a.coeffs().len();
    (0..dim)
        .map(|j| {
            let column = cyc_mul(a, &CycElt::zeta_pow(a.n(), j as i64)).expect("same conductor");
            column.coeffs()[j].clone()
        })
        .fold(Rational::zero(), |acc, c| acc + c)
}

/// φ(n) by counting `1 <= k <= n` coprime to `n`.
pub fn brute_totient(n: u64) -> u64 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
}

/// Resultant as the determinant of the Sylvester matrix, by Gaussian
/// elimination over Q. Both inputs must be nonzero.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let m = f.degree().expect("nonzero f");
    let n = g.degree().expect("nonzero g");
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = Rational::from_integer(c.clone());
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = Rational::from_integer(c.clone());
        }
    }
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &p;
            let (upper, lower) = rows.split_at_mut(r);
            for (target, source) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * source;
            }
        }
    }
    det.to_integer()
}
