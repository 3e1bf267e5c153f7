//! Textbook RSA rewritten as a bivariate linear relation.
//!
//! `C = M^e mod N` is the same statement as `C = M^e - N*j` where `j`
//! counts how many times `M^e` wraps past `N`. Knowing either unknown of
//! the pair `(M, j)` yields the other: from `j`, the plaintext is the
//! exact e-th root of `C + N*j`, and no factor of `N` ever enters the
//! computation.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;

use crate::error::Error;
use crate::numtheory::{gen_prime, integer_root};
use crate::Result;

/// A rewritten instance: modulus, exponent, residue, wrap count, and the
/// modulus bit size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsaBfhpInstance {
    pub n: BigUint,
    pub e: u32,
    pub c: BigUint,
    pub j: BigUint,
    pub k: u32,
}

impl RsaBfhpInstance {
    /// Rewrite the encryption of `m` under `(e, n)` into an instance.
    pub fn from_message(m: &BigUint, e: u32, n: &BigUint) -> Result<RsaBfhpInstance> {
        let (c, j) = to_bfhp(m, e, n)?;
        Ok(RsaBfhpInstance { k: n.bits() as u32, n: n.clone(), e, c, j })
    }

    /// Recover the message from the stored residue and wrap count.
    pub fn solve(&self) -> Result<BigUint> {
        solve_given_j(&self.c, &self.j, self.e, &self.n)
    }
}

/// Rewrite an encryption: returns `(C, j)` with `C = M^e mod N` and
/// `j = (M^e - C) / N` exactly. Rejects `M >= N`.
pub fn to_bfhp(m: &BigUint, e: u32, n: &BigUint) -> Result<(BigUint, BigUint)> {
    if m >= n {
        return Err(Error::InvalidParameter(format!(
            "message must be below the modulus (M has {} bits, N has {})",
            m.bits(),
            n.bits()
        )));
    }
    let power = m.pow(e);
    let (j, c) = power.div_rem(n);
    Ok((c, j))
}

/// Recover `M` as the exact e-th root of `C + N*j`.
///
/// Takes no factor of `N`; an inexact root means `(C, j)` does not come
/// from a real message.
pub fn solve_given_j(c: &BigUint, j: &BigUint, e: u32, n: &BigUint) -> Result<BigUint> {
    let lifted = c + n * j;
    let (root, exact) = integer_root(&lifted, e);
    if !exact {
        return Err(Error::NotAPerfectPower { e });
    }
    Ok(root)
}

/// Both reduction directions at once: rewriting then solving recovers `M`,
/// and the wrap count recomputed from `M` matches.
pub fn check_equivalence(m: &BigUint, e: u32, n: &BigUint) -> Result<bool> {
    let (c, j) = to_bfhp(m, e, n)?;
    let recovered = solve_given_j(&c, &j, e, n)?;
    if recovered != *m {
        return Ok(false);
    }
    let power = m.pow(e);
    Ok((&power - &c) / n == j)
}

/// Predicted interval `(2^(k(e-1)-1), 2^(k(e-1)) - 1)` for the line
/// parameter when solving `X - N*j = C` with a k-bit modulus.
///
/// An approximation: small messages produce smaller wrap counts, so
/// membership is reported empirically, never assumed.
pub fn t_interval(k: u32, e: u32) -> Result<(BigUint, BigUint)> {
    if e < 2 {
        return Err(Error::InvalidParameter(format!(
            "t interval needs e >= 2 (got {e})"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("t interval needs k >= 1".into()));
    }
    let bits = k * (e - 1);
    let lo = BigUint::one() << (bits - 1);
    let hi = (BigUint::one() << bits) - 1u32;
    Ok((lo, hi))
}

/// Toy RSA key for demos and tests: two k/2-bit primes and an exponent
/// coprime to phi(N). `d` is computed for completeness but nothing in
/// this module uses it.
#[derive(Debug, Clone)]
pub struct ToyRsaKey {
    pub n: BigUint,
    pub e: u32,
    pub d: BigUint,
    pub p: BigUint,
    pub q: BigUint,
}

/// Generate a toy key with a roughly k-bit modulus. Requires k >= 6 and
/// an odd e >= 3 so the coprimality retry terminates.
pub fn toy_rsa_keygen<R: Rng + ?Sized>(k: u32, e: u32, rng: &mut R) -> Result<ToyRsaKey> {
    if k < 6 {
        return Err(Error::InvalidParameter(format!(
            "toy keygen needs k >= 6 (got {k})"
        )));
    }
    if e < 3 || e.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "toy keygen needs an odd e >= 3 (got {e})"
        )));
    }
    let half = k / 2;
    let e_big = BigUint::from(e);
    for _ in 0..10_000 {
        let p = gen_prime(half, rng);
        let q = gen_prime(k - half, rng);
        if p == q {
            continue;
        }
        let phi = (&p - 1u32) * (&q - 1u32);
        if !phi.gcd(&e_big).is_one() {
            continue;
        }
        let (_, x, _) = crate::numtheory::ext_gcd(&e_big, &phi)?;
        let d = x
            .mod_floor(&num_bigint::BigInt::from(phi.clone()))
            .to_biguint()
            .expect("reduced into [0, phi)");
        let n = &p * &q;
        return Ok(ToyRsaKey { n, e, d, p, q });
    }
    Err(Error::SamplingExhausted { attempts: 10_000 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use num_bigint::RandBigInt;
    use num_traits::Zero;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rewrite_small_example() {
        // 2^7 = 128 = 77 + 51
        assert_eq!(to_bfhp(&big(2), 7, &big(77)).unwrap(), (big(51), big(1)));
        assert_eq!(to_bfhp(&big(1), 7, &big(77)).unwrap(), (big(1), big(0)));
        assert_eq!(to_bfhp(&big(0), 3, &big(15)).unwrap(), (big(0), big(0)));
        assert!(to_bfhp(&big(77), 7, &big(77)).is_err());
    }

    #[test]
    fn solve_recovers_message() {
        assert_eq!(solve_given_j(&big(51), &big(1), 7, &big(77)).unwrap(), big(2));
        assert_eq!(solve_given_j(&big(1), &big(0), 7, &big(77)).unwrap(), big(1));
        // 51 + 2*77 = 205 is not a 7th power.
        assert!(matches!(
            solve_given_j(&big(51), &big(2), 7, &big(77)),
            Err(Error::NotAPerfectPower { e: 7 })
        ));
    }

    #[test]
    fn equivalence_round_trips() {
        assert!(check_equivalence(&big(2), 7, &big(77)).unwrap());
        assert!(check_equivalence(&big(0), 3, &big(15)).unwrap());
    }

    #[test]
    fn instance_round_trips() {
        let inst = RsaBfhpInstance::from_message(&big(2), 7, &big(77)).unwrap();
        assert_eq!((inst.c.clone(), inst.j.clone()), (big(51), big(1)));
        assert_eq!(inst.k, 7);
        assert_eq!(inst.solve().unwrap(), big(2));
    }

    #[test]
    fn equivalence_exhaustive_toy_modulus() {
        // N = 2491 = 47 * 53, e = 3, 500 random messages.
        let n = big(2491);
        let mut rng = rng::seeded(21);
        for _ in 0..500 {
            let m = rng.gen_biguint_range(&BigUint::zero(), &n);
            assert!(check_equivalence(&m, 3, &n).unwrap(), "failed for M = {m}");
        }
    }

    #[test]
    fn t_interval_values() {
        assert_eq!(t_interval(4, 3).unwrap(), (big(128), big(255)));
        assert_eq!(t_interval(2, 2).unwrap(), (big(2), big(3)));
        let (lo, _) = t_interval(1024, 3).unwrap();
        assert_eq!(lo, BigUint::one() << 2047);
        assert!(t_interval(4, 1).is_err());
    }

    #[test]
    fn wrap_count_stays_below_power_bound() {
        // j < N^(e-1) follows from M^e < N^e.
        let mut rng = rng::seeded(22);
        let n = big(2491);
        for e in [3u32, 5] {
            for _ in 0..100 {
                let m = rng.gen_biguint_range(&BigUint::zero(), &n);
                let (_, j) = to_bfhp(&m, e, &n).unwrap();
                assert!(j < n.pow(e - 1));
            }
        }
    }

    #[test]
    fn interval_coverage_reported_not_asserted() {
        // Fraction of wrap counts inside the predicted window, for the
        // record. Only needs a k-bit semiprime; e plays no key role here.
        let mut rng = rng::seeded(23);
        for (k, e) in [(8u32, 3u32), (8, 5), (16, 3), (16, 5)] {
            let n = loop {
                let p = gen_prime(k / 2, &mut rng);
                let q = gen_prime(k / 2, &mut rng);
                let n = &p * &q;
                if p != q && n.bits() == u64::from(k) {
                    break n;
                }
            };
            let (lo, hi) = t_interval(k, e).unwrap();
            let m_lo = (BigUint::one() << (k - 1)) + 1u32;
            let mut inside = 0u32;
            let total = 200u32;
            for _ in 0..total {
                let m = rng.gen_biguint_range(&m_lo, &n);
                let (_, j) = to_bfhp(&m, e, &n).unwrap();
                assert!(
                    j < (BigUint::one() << (k * (e - 1))),
                    "wrap count above 2^(k(e-1)) at k={k}, e={e}"
                );
                if j > lo && j <= hi {
                    inside += 1;
                }
            }
            println!("k={k} e={e}: {inside}/{total} wrap counts inside the predicted window");
        }
    }

    #[test]
    fn toy_keygen_produces_usable_keys() {
        let mut rng = rng::seeded(24);
        let key = toy_rsa_keygen(16, 5, &mut rng).unwrap();
        assert_eq!(&key.p * &key.q, key.n);
        let phi = (&key.p - 1u32) * (&key.q - 1u32);
        assert_eq!((BigUint::from(key.e) * &key.d) % &phi, BigUint::one());
        assert!(toy_rsa_keygen(16, 4, &mut rng).is_err());
    }
}
