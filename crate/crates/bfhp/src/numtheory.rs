//! Exact big-integer primitives: primality, extended Euclid, integer roots,
//! and pairwise-coprime rejection sampling.
//!
//! Everything works on non-negative [`BigUint`] values; the only signed
//! outputs are the Bezout coefficients of [`ext_gcd`]. All sampling ranges
//! follow the same convention: an "n-bit value" is drawn uniformly from
//! `{2^(n-1)+1, ..., 2^n - 1}`, strictly above the smallest n-bit integer.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use std::sync::OnceLock;

use crate::error::Error;
use crate::Result;

/// Miller-Rabin rounds used by [`gen_prime`]; error probability below 4^-40.
pub const MILLER_RABIN_ROUNDS: u32 = 40;

/// Attempt budget for rejection sampling before giving up.
pub const DEFAULT_SAMPLING_BUDGET: u64 = 10_000;

const SIEVE_LIMIT: u32 = 1 << 12;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_LIMIT as usize];
        let mut primes = Vec::new();
        for p in 2..SIEVE_LIMIT {
            if !composite[p as usize] {
                primes.push(p);
                let mut q = (p as u64) * (p as u64);
                while q < SIEVE_LIMIT as u64 {
                    composite[q as usize] = true;
                    q += p as u64;
                }
            }
        }
        primes
    })
}

/// Uniform draw from `{2^(bits-1)+1, ..., 2^bits - 1}`.
///
/// The result always has exactly `bits` bits and is strictly above the
/// interval's lower endpoint, so it sits strictly inside `(2^(bits-1), 2^bits)`.
pub fn sample_bits<R: Rng + ?Sized>(bits: u32, rng: &mut R) -> BigUint {
    assert!(bits >= 2, "bit range {{2^(bits-1)+1, ..}} empty for bits < 2");
    let lo = (BigUint::one() << (bits - 1)) + 1u32;
    let hi = BigUint::one() << bits;
    rng.gen_biguint_range(&lo, &hi)
}

/// Miller-Rabin with a trial-division pre-filter.
///
/// Deterministic for candidates below the sieve-limit square; otherwise a
/// fixed base-2 round plus `rounds` random-base rounds.
pub fn is_probable_prime<R: Rng + ?Sized>(n: &BigUint, rounds: u32, rng: &mut R) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in small_primes() {
        let p_big = BigUint::from(p);
        if *n == p_big {
            return true;
        }
        if (n % &p_big).is_zero() {
            return false;
        }
    }
    // Survived trial division by everything below SIEVE_LIMIT.
    if *n < BigUint::from(SIEVE_LIMIT as u64 * SIEVE_LIMIT as u64) {
        return true;
    }

    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n odd, n-1 nonzero");
    let d = &n_minus_1 >> s;

    let witness = |a: &BigUint| -> bool {
        // true = composite witness found
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    if witness(&two) {
        return false;
    }
    for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        if witness(&a) {
            return false;
        }
    }
    true
}

/// Random probable prime with exactly `bits` bits, `2^(bits-1) < p < 2^bits`.
///
/// Loops until a candidate passes [`MILLER_RABIN_ROUNDS`] rounds; expected
/// number of trials is O(bits).
pub fn gen_prime<R: Rng + ?Sized>(bits: u32, rng: &mut R) -> BigUint {
    assert!(bits >= 3, "need bits >= 3 for an odd prime above 2^(bits-1)");
    loop {
        let candidate = sample_bits(bits, rng) | BigUint::one();
        if is_probable_prime(&candidate, MILLER_RABIN_ROUNDS, rng) {
            return candidate;
        }
    }
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
///
/// Rejects `a = b = 0`, where the gcd is undefined.
pub fn ext_gcd(a: &BigUint, b: &BigUint) -> Result<(BigUint, BigInt, BigInt)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut r0 = BigInt::from(a.clone());
    let mut r1 = BigInt::from(b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let x2 = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, x2);
        let y2 = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, y2);
    }
    let g = r0.to_biguint().expect("gcd of non-negative inputs");
    Ok((g, x0, y0))
}

/// Floor of the e-th root and whether it is exact.
///
/// `r = floor(x^(1/e))`; the flag is true iff `r^e = x`.
pub fn integer_root(x: &BigUint, e: u32) -> (BigUint, bool) {
    assert!(e >= 1, "root degree must be positive");
    let r = x.nth_root(e);
    let exact = r.pow(e) == *x;
    (r, exact)
}

/// `count` integers from `{2^(bits-1)+1, ..., 2^bits - 1}`, pairwise coprime,
/// none listed in `exclude`. Default retry budget.
pub fn sample_pairwise_coprime<R: Rng + ?Sized>(
    count: usize,
    bits: u32,
    exclude: &[BigUint],
    rng: &mut R,
) -> Result<Vec<BigUint>> {
    sample_pairwise_coprime_with_budget(count, bits, exclude, DEFAULT_SAMPLING_BUDGET, rng)
}

/// As [`sample_pairwise_coprime`] with an explicit attempt budget.
///
/// Exhausting the budget signals that the bit size cannot host `count`
/// pairwise-coprime values outside `exclude`.
pub fn sample_pairwise_coprime_with_budget<R: Rng + ?Sized>(
    count: usize,
    bits: u32,
    exclude: &[BigUint],
    budget: u64,
    rng: &mut R,
) -> Result<Vec<BigUint>> {
    assert!(count >= 1, "count must be positive");
    if bits < 2 {
        return Err(Error::InvalidParameter(format!(
            "bits = {bits} leaves no candidates to sample"
        )));
    }
    let mut picked: Vec<BigUint> = Vec::with_capacity(count);
    let mut attempts: u64 = 0;
    while picked.len() < count {
        if attempts >= budget {
            return Err(Error::SamplingExhausted { attempts });
        }
        attempts += 1;
        let candidate = sample_bits(bits, rng);
        if exclude.contains(&candidate) {
            continue;
        }
        if picked.iter().all(|v| v.gcd(&candidate).is_one()) {
            picked.push(candidate);
        }
    }
    Ok(picked)
}

/// Signed floor division helper shared by the solvers (divisor > 0).
pub(crate) fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    a.div_floor(b)
}

/// Signed ceiling division helper (divisor > 0).
pub(crate) fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    -(-a).div_floor(b)
}
