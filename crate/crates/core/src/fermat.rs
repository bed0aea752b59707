//! Exhaustive Case I search for `x^p + y^p = z^p` with `p ∤ xyz`.
//!
//! Because `p` is odd, any solution can be moved (by negating and swapping
//! terms) to one with `1 <= x <= y` and `z > 0`, so only that box is scanned.

use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, ToPrimitive};

use crate::arith::{is_prime, mod_pow};
use crate::error::{Error, Result};
use crate::regularity::is_regular_prime;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub p: u64,
    pub bound: u64,
    pub candidates_examined: u64,
    pub pruned_by_filter: u64,
    pub solutions: Vec<(u64, u64, u64)>,
}

impl SearchReport {
    fn empty(p: u64, bound: u64) -> Self {
        SearchReport {
            p,
            bound,
            candidates_examined: 0,
            pruned_by_filter: 0,
            solutions: Vec::new(),
        }
    }

    /// Combines reports over disjoint x-ranges of the same search.
    pub fn merge(mut self, other: SearchReport) -> Result<SearchReport> {
        if (self.p, self.bound) != (other.p, other.bound) {
            return Err(Error::InvalidArgument("merging reports of different searches".into()));
        }
        self.candidates_examined += other.candidates_examined;
        self.pruned_by_filter += other.pruned_by_filter;
        self.solutions.extend(other.solutions);
        self.solutions.sort_unstable();
        Ok(self)
    }
}

/// Number of pairs `1 <= x <= y <= bound`.
pub fn box_size(bound: u64) -> u64 {
    bound * (bound + 1) / 2
}

/// Necessary condition from `t^p ≡ t (mod p)`: a solution has `x + y ≡ z (mod p)`.
pub fn little_fermat_filter(p: u64, x: i64, y: i64, z: i64) -> bool {
    let p = p as i128;
    (x as i128 + y as i128 - z as i128).rem_euclid(p) == 0
}

/// Integer p-th root of `s` by binary search, if `s` is a perfect p-th power.
pub fn perfect_pth_root(s: &BigInt, p: u32) -> Option<BigInt> {
    if !s.is_positive() || p == 0 {
        return None;
    }
    let mut lo = BigInt::one();
    let mut hi = BigInt::one() << (s.bits() / p as u64 + 1);
    // invariant: lo^p <= s < hi^p
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if Pow::pow(&mid, p) <= *s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (Pow::pow(&lo, p) == *s).then_some(lo)
}

fn require_odd_prime(p: u64) -> Result<u32> {
    if p == 2 {
        return Err(Error::OddPrimeRequired(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    u32::try_from(p).map_err(|_| Error::InvalidArgument(format!("exponent {p} too large")))
}

/// Sound pair filter. If `x^p + y^p = z^p` with `p ∤ xyz`, then
/// `z ≡ x + y =: r (mod p)` with `r ≢ 0`, and therefore `z^p ≡ r^p (mod p^2)`.
fn keep_pair(p: u64, x: u64, y: u64) -> bool {
    if x.is_multiple_of(p) || y.is_multiple_of(p) {
        return false;
    }
    let r = (x + y) % p;
    if r == 0 {
        return false;
    }
    let p2 = p * p;
    (mod_pow(x, p, p2) + mod_pow(y, p, p2)) % p2 == mod_pow(r, p, p2)
}

fn is_case_i_solution(p: u64, x: u64, y: u64, z: &BigInt) -> bool {
    let e = p as u32;
    let zp: BigInt = Pow::pow(z, e);
    let Some(zu) = z.to_u64() else { return false };
    x != 0
        && y != 0
        && zu != 0
        && !x.is_multiple_of(p)
        && !y.is_multiple_of(p)
        && zu % p != 0
        && Pow::pow(BigInt::from(x), e) + Pow::pow(BigInt::from(y), e) == zp
}

/// Scans `x ∈ xs ∩ [1, bound]`, `x <= y <= bound`.
pub fn case_i_search_range(p: u64, bound: u64, xs: Range<u64>, use_filter: bool) -> Result<SearchReport> {
    let e = require_odd_prime(p)?;
    let mut report = SearchReport::empty(p, bound);
    let lo = xs.start.max(1);
    let hi = xs.end.min(bound + 1);
    if lo >= hi {
        return Ok(report);
    }
    // y ranges over [lo, bound]
    let powers: Vec<BigInt> = (lo..=bound).map(|t| Pow::pow(BigInt::from(t), e)).collect();
    let pow_of = |t: u64| &powers[(t - lo) as usize];
    for x in lo..hi {
        for y in x..=bound {
            report.candidates_examined += 1;
            if use_filter && !keep_pair(p, x, y) {
                report.pruned_by_filter += 1;
                continue;
            }
            let s = pow_of(x) + pow_of(y);
            if let Some(z) = perfect_pth_root(&s, e) {
                if is_case_i_solution(p, x, y, &z) {
                    let z = z.to_u64().expect("checked above");
                    debug_assert!(little_fermat_filter(p, x as i64, y as i64, z as i64));
                    report.solutions.push((x, y, z));
                }
            }
        }
    }
    Ok(report)
}

pub fn case_i_search(p: u64, bound: u64, use_filter: bool) -> Result<SearchReport> {
    case_i_search_range(p, bound, 1..bound + 1, use_filter)
}

/// The same search split into `workers` x-ranges on scoped threads; the merged
/// report is identical to the single-threaded one.
pub fn case_i_search_parallel(p: u64, bound: u64, use_filter: bool, workers: usize) -> Result<SearchReport> {
    require_odd_prime(p)?;
    let workers = workers.max(1) as u64;
    let chunk = bound.div_ceil(workers).max(1);
    let ranges: Vec<Range<u64>> = (0..workers)
        .map(|i| (1 + i * chunk)..(1 + (i + 1) * chunk).min(bound + 1))
        .filter(|r| !r.is_empty())
        .collect();
    let parts: Vec<Result<SearchReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| scope.spawn(move || case_i_search_range(p, bound, r, use_filter)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    parts
        .into_iter()
        .try_fold(SearchReport::empty(p, bound), |acc, part| acc.merge(part?))
}

/// Checks the regularity hypothesis, then runs the filtered search.
pub fn check_regular_and_search(p: u64, bound: u64) -> Result<SearchReport> {
    require_odd_prime(p)?;
    let regularity = is_regular_prime(p)?;
    if !regularity.regular {
        return Err(Error::IrregularPrime {
            p,
            pairs: regularity.pairs,
        });
    }
    case_i_search(p, bound, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_examples() {
        assert!(little_fermat_filter(5, 1, 1, 2));
        assert!(!little_fermat_filter(5, 1, 1, 3));
        assert!(little_fermat_filter(7, -3, 4, 1));
    }

    #[test]
    fn root_examples() {
        assert_eq!(perfect_pth_root(&BigInt::from(32), 5), Some(BigInt::from(2)));
        assert_eq!(perfect_pth_root(&BigInt::from(33), 5), None);
        assert_eq!(perfect_pth_root(&BigInt::from(1), 7), Some(BigInt::one()));
        assert_eq!(perfect_pth_root(&BigInt::from(0), 3), None);
    }

    #[test]
    fn roots_of_exact_powers() {
        for p in [3u32, 5, 7, 11] {
            for z in 1..=100u64 {
                let s: BigInt = Pow::pow(BigInt::from(z), p);
                assert_eq!(perfect_pth_root(&s, p), Some(BigInt::from(z)));
                if z >= 2 {
                    assert_eq!(perfect_pth_root(&(&s + 1), p), None);
                    assert_eq!(perfect_pth_root(&(&s - 1), p), None);
                }
            }
        }
    }

    #[test]
    fn search_examples() {
        for use_filter in [true, false] {
            let r = case_i_search(3, 10, use_filter).unwrap();
            assert!(r.solutions.is_empty());
            assert_eq!(r.candidates_examined, 55);
            let r = case_i_search(5, 20, use_filter).unwrap();
            assert!(r.solutions.is_empty());
            let r = case_i_search(7, 0, use_filter).unwrap();
            assert_eq!(r.candidates_examined, 0);
            assert!(r.solutions.is_empty());
        }
        assert_eq!(case_i_search(4, 5, true), Err(Error::NotPrime(4)));
        assert_eq!(case_i_search(2, 5, true), Err(Error::OddPrimeRequired(2)));
    }

    #[test]
    fn filter_is_sound() {
        for p in [3u64, 5, 7] {
            let e = p as u32;
            let filtered = case_i_search(p, 15, true).unwrap();
            let plain = case_i_search(p, 15, false).unwrap();
            assert_eq!(filtered.solutions, plain.solutions);
            assert_eq!(filtered.candidates_examined, box_size(15));
            assert_eq!(plain.candidates_examined, box_size(15));
            assert_eq!(plain.pruned_by_filter, 0);
            assert!(filtered.pruned_by_filter > 0);
            for x in 1..=15u64 {
                for y in x..=15 {
                    if keep_pair(p, x, y) {
                        continue;
                    }
                    let s: BigInt = Pow::pow(BigInt::from(x), e) + Pow::pow(BigInt::from(y), e);
                    if let Some(z) = perfect_pth_root(&s, e) {
                        assert!(!is_case_i_solution(p, x, y, &z));
                    }
                }
            }
        }
    }

    #[test]
    fn pth_power_mod_p_squared_depends_on_residue() {
        // the lifting step keep_pair relies on
        for p in [3u64, 5, 7, 11] {
            let p2 = p * p;
            for z in 1..200u64 {
                assert_eq!(mod_pow(z, p, p2), mod_pow(z % p, p, p2));
            }
        }
    }

    #[test]
    fn partitioned_search_matches() {
        let single = case_i_search(5, 30, true).unwrap();
        for workers in [1, 2, 3, 7, 40] {
            assert_eq!(case_i_search_parallel(5, 30, true, workers).unwrap(), single);
        }
        let a = case_i_search_range(3, 20, 1..8, false).unwrap();
        let b = case_i_search_range(3, 20, 8..21, false).unwrap();
        assert_eq!(a.merge(b).unwrap(), case_i_search(3, 20, false).unwrap());
    }

    #[test]
    fn pipeline_examples() {
        let r = check_regular_and_search(5, 20).unwrap();
        assert!(r.solutions.is_empty());
        match check_regular_and_search(37, 10) {
            Err(Error::IrregularPrime { p: 37, pairs }) => assert_eq!(pairs, vec![(37, 32)]),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(check_regular_and_search(2, 10), Err(Error::OddPrimeRequired(2)));
    }
}
