//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p cyclotomic-cli --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use cyclotomic::arith::{is_prime, rat_mod_prime, totient, PosNat, Rational};
use cyclotomic::cycring::{
    cyc_mul, cyc_sub, decompose_unit, factor_sum_pth_powers, fold_product, inverse, is_real, is_unit, norm,
    trace, CycElt,
};
use cyclotomic::cyclotomic::{cyclotomic_poly, discr_prime_pow_formula, product_of_divisor_cyclotomics};
use cyclotomic::fermat::case_i_search;
use cyclotomic::oracle::{conjugate_product_norm, moebius_product, multiplication_matrix_trace};
use cyclotomic::poly::{poly_discriminant, IntPoly};
use cyclotomic::regularity::{bernoulli, vsc_denominator};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pn(n: u64) -> PosNat {
    PosNat::new(n).unwrap()
}

fn report(id: u32, title: &str, ok: bool, detail: String, elapsed: Duration) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[{verdict}] AC{id} {title}: {detail} ({:.2?})", elapsed);
    assert!(ok, "AC{id} {title} failed: {detail}");
}

#[test]
fn ac1_irregular_primes_below_100() {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cyclotomic_cli::run(["cyclo", "regular", "--upto", "100", "--json"], &mut out, &mut err);
    let elapsed = start.elapsed();
    let v: serde_json::Value = serde_json::from_slice(&out).expect("json output");
    let irregular: Vec<u64> = v["result"]["irregular"]
        .as_array()
        .expect("irregular list")
        .iter()
        .map(|p| p.as_u64().unwrap())
        .collect();
    let ok = code == 0 && irregular == [37, 59, 67] && elapsed < Duration::from_secs(60);
    report(1, "irregular primes < 100", ok, format!("irregular = {irregular:?}"), elapsed);
}

#[test]
fn ac2_discriminant_formula_vs_resultant() {
    let start = Instant::now();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for p in (2..=101u64).filter(|&p| is_prime(p)) {
        let mut k = 1u32;
        while totient(pn(p.pow(k))) <= 100 {
            let oracle = poly_discriminant(&cyclotomic_poly(pn(p.pow(k)))).unwrap();
            if discr_prime_pow_formula(p, k).unwrap() != oracle {
                mismatches.push((p, k));
            }
            checked += 1;
            k += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && checked > 0 && elapsed < Duration::from_secs(30);
    report(
        2,
        "discriminant formula = disc(Φ_{p^k}) for φ(p^k) <= 100",
        ok,
        format!("{checked} prime powers, mismatches {mismatches:?}"),
        elapsed,
    );
}

#[test]
fn ac3_cyclotomic_product_identity() {
    let start = Instant::now();
    let product_failures: Vec<u64> = (1..=500u64)
        .filter(|&n| product_of_divisor_cyclotomics(pn(n)) != IntPoly::x_pow_minus_one(n as usize))
        .collect();
    let oracle_failures: Vec<u64> = (1..=2000u64)
        .filter(|&n| *cyclotomic_poly(pn(n)) != moebius_product(pn(n)))
        .collect();
    let ok = product_failures.is_empty() && oracle_failures.is_empty();
    report(
        3,
        "∏_{d|n} Φ_d = X^n - 1 (n <= 500), division = Möbius product (n <= 2000)",
        ok,
        format!("failures {product_failures:?} / {oracle_failures:?}"),
        start.elapsed(),
    );
}

#[test]
fn ac4_fermat_factorization_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC4);
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in [3u64, 5, 7, 11, 13] {
        for _ in 0..200 {
            let x: i64 = rng.gen_range(-50..=50);
            let y: i64 = rng.gen_range(-50..=50);
            let prod = fold_product(&factor_sum_pth_powers(&x.into(), &y.into(), p).unwrap()).unwrap();
            let expected: BigInt = Pow::pow(BigInt::from(x), p as u32) + Pow::pow(BigInt::from(y), p as u32);
            if prod.as_scalar() != Some(&Rational::from_integer(expected)) {
                failures.push((p, x, y));
            }
            checked += 1;
        }
    }
    report(
        4,
        "∏ (x + ζ^i y) = x^p + y^p",
        failures.is_empty(),
        format!("{checked} cases, failures {failures:?}"),
        start.elapsed(),
    );
}

fn random_element(rng: &mut ChaCha8Rng, n: u64) -> CycElt {
    let len = totient(pn(n)) as usize;
    let coeffs: Vec<Rational> = (0..len)
        .map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into()))
        .collect();
    CycElt::reduce(pn(n), &coeffs)
}

#[test]
fn ac5_norm_trace_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC5);
    let mut failures = Vec::new();
    for n in 1..=30u64 {
        for _ in 0..100 {
            let a = random_element(&mut rng, n);
            let norm_ok = norm(&a) == conjugate_product_norm(&a);
            let trace_ok = trace(&a).ok() == Some(multiplication_matrix_trace(&a));
            if !(norm_ok && trace_ok) {
                failures.push(a.to_string());
            }
        }
    }
    report(
        5,
        "resultant norm = conjugate product, trace = matrix trace (n <= 30)",
        failures.is_empty(),
        format!("3000 elements, failures {failures:?}"),
        start.elapsed(),
    );
}

#[test]
fn ac6_unit_decomposition() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in [5u64, 7, 11, 13] {
        let n = pn(p);
        let one_minus_zeta = cyc_sub(&CycElt::one(n), &CycElt::zeta_pow(n, 1)).unwrap();
        let denominator = inverse(&one_minus_zeta).unwrap();
        for k in 2..p {
            let num = cyc_sub(&CycElt::one(n), &CycElt::zeta_pow(n, k as i64)).unwrap();
            let u = cyc_mul(&num, &denominator).unwrap();
            let ok = match decompose_unit(&u, p) {
                Ok(d) => {
                    is_real(&d.x)
                        && is_unit(&d.x).unwrap_or(false)
                        && d.m < p
                        && cyc_mul(&d.x, &CycElt::zeta_pow(n, d.m as i64)).unwrap() == u
                }
                Err(_) => false,
            };
            if !ok {
                failures.push((p, k));
            }
            checked += 1;
        }
    }
    report(
        6,
        "cyclotomic units decompose as x·ζ^m with x real",
        failures.is_empty(),
        format!("{checked} units, failures {failures:?}"),
        start.elapsed(),
    );
}

#[test]
fn ac7_case_one_search() {
    let start = Instant::now();
    let mut detail = Vec::new();
    let mut ok = true;
    for p in [3u64, 5, 7] {
        let filtered = case_i_search(p, 25, true).unwrap();
        let plain = case_i_search(p, 25, false).unwrap();
        ok &= filtered.solutions.is_empty() && plain.solutions == filtered.solutions;
        ok &= filtered.candidates_examined == plain.candidates_examined;
        detail.push(format!(
            "p={p}: {} pairs, {} pruned, {} solutions",
            plain.candidates_examined,
            filtered.pruned_by_filter,
            filtered.solutions.len()
        ));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(120);
    report(7, "no Case I solutions, bound 25", ok, detail.join("; "), elapsed);
}

#[test]
fn ac8_bernoulli_suite() {
    let start = Instant::now();
    let vsc_bad: Vec<usize> = (2..=60)
        .step_by(2)
        .filter(|&m| *bernoulli(m).denom() != vsc_denominator(m as u64).unwrap())
        .collect();
    let odd_bad: Vec<usize> = (3..=99).step_by(2).filter(|&m| !bernoulli(m).is_zero()).collect();
    let mut kummer_checked = 0;
    let mut kummer_bad = Vec::new();
    for p in [5u64, 7, 11] {
        for m in (2..=40u64).step_by(2).filter(|m| m % (p - 1) != 0) {
            for m2 in (2..=40u64).step_by(2).filter(|m2| m2 % (p - 1) == m % (p - 1) && *m2 != m) {
                let lhs = bernoulli(m as usize) / Rational::from_integer(m.into());
                let rhs = bernoulli(m2 as usize) / Rational::from_integer(m2.into());
                let (l, r) = (rat_mod_prime(&lhs, p), rat_mod_prime(&rhs, p));
                if l.is_none() || l != r {
                    kummer_bad.push((p, m, m2));
                }
                kummer_checked += 1;
            }
        }
    }
    let ok = vsc_bad.is_empty() && odd_bad.is_empty() && kummer_bad.is_empty() && kummer_checked > 0;
    report(
        8,
        "von Staudt-Clausen, odd vanishing, Kummer congruences",
        ok,
        format!("vsc {vsc_bad:?}, odd {odd_bad:?}, kummer {kummer_checked} checks, failures {kummer_bad:?}"),
        start.elapsed(),
    );
}
