//! The coprime bivariate linear form `G(u, v) = A1*u + A2*v` and its
//! solution structure.
//!
//! With `gcd(A1, A2) = 1` every integer solution lies on a single line
//! `(u0 + A2*t, v0 - A1*t)`. Recovering a bounded `(u, v)` from `G` means
//! locating the right `t` inside the window implied by the bounds; at
//! cryptographic sizes that window holds on the order of `2^(m-n-2)`
//! candidates, which is what the hardness assumption rests on. At desk
//! scale the window is small and [`solutions_in_box`] enumerates it
//! exactly, which is how the solver tests and key-recovery experiments
//! work.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::Error;
use crate::numtheory::{ceil_div, floor_div, sample_pairwise_coprime};
use crate::Result;

/// Cap on the number of candidate `t` values [`solutions_in_box`] will
/// enumerate before refusing. Large instances must fail loudly, not grind.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

/// A problem instance: coefficients, bound sizes, and the target value.
///
/// `n` is the coefficient bit size, `m` the bit size bounding `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfhpInstance {
    pub a1: BigUint,
    pub a2: BigUint,
    pub m: u32,
    pub n: u32,
    pub g: BigUint,
}

/// The one-parameter family of all integer solutions to `A1*u + A2*v = G`:
/// `(u0 + step_u*t, v0 - step_v*t)` with `step_u = A2`, `step_v = A1`.
///
/// `u0` is normalized into `[0, A2)`, so `v0` may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionLine {
    pub u0: BigUint,
    pub v0: BigInt,
    pub step_u: BigUint,
    pub step_v: BigUint,
}

impl SolutionLine {
    /// The solution at line parameter `t`.
    pub fn point_at(&self, t: &BigInt) -> (BigInt, BigInt) {
        let u = BigInt::from(self.u0.clone()) + BigInt::from(self.step_u.clone()) * t;
        let v = &self.v0 - BigInt::from(self.step_v.clone()) * t;
        (u, v)
    }
}

fn require_coprime(a1: &BigUint, a2: &BigUint) -> Result<()> {
    let g = a1.gcd(a2);
    if !g.is_one() {
        return Err(Error::NotCoprime { gcd: g.to_string() });
    }
    Ok(())
}

/// Evaluate `A1*u + A2*v`, rejecting non-coprime coefficients.
pub fn eval_form(a1: &BigUint, a2: &BigUint, u: &BigUint, v: &BigUint) -> Result<BigUint> {
    require_coprime(a1, a2)?;
    Ok(a1 * u + a2 * v)
}

/// General solution of `A1*u + A2*v = G` for coprime coefficients.
///
/// The particular point comes from the extended Euclid Bezout pair, then
/// `u0` is reduced into `[0, A2)`; `v0 = (G - A1*u0) / A2` is exact.
pub fn general_solution(a1: &BigUint, a2: &BigUint, g: &BigUint) -> Result<SolutionLine> {
    require_coprime(a1, a2)?;
    let (_, x, _) = crate::numtheory::ext_gcd(a1, a2)?;
    let a1_s = BigInt::from(a1.clone());
    let a2_s = BigInt::from(a2.clone());
    let g_s = BigInt::from(g.clone());
    let u0 = (x * &g_s).mod_floor(&a2_s);
    let (v0, rem) = (&g_s - &a1_s * &u0).div_rem(&a2_s);
    debug_assert!(rem.is_zero());
    debug_assert_eq!(&a1_s * &u0 + &a2_s * &v0, g_s);
    Ok(SolutionLine {
        u0: u0.to_biguint().expect("normalized into [0, A2)"),
        v0,
        step_u: a2.clone(),
        step_v: a1.clone(),
    })
}

/// All `(u, v)` with `A1*u + A2*v = G`, `lo < u < hi` and `lo < v < hi`,
/// sorted by ascending `u`. Default enumeration cap.
pub fn solutions_in_box(
    a1: &BigUint,
    a2: &BigUint,
    g: &BigUint,
    lo: &BigUint,
    hi: &BigUint,
) -> Result<Vec<(BigUint, BigUint)>> {
    solutions_in_box_capped(a1, a2, g, lo, hi, DEFAULT_ENUMERATION_CAP)
}

/// As [`solutions_in_box`] with an explicit candidate cap.
///
/// Works by intersecting the two `t`-windows carved out of the solution
/// line by the `u` and `v` bounds, never by scanning the box. An
/// intersected window wider than `cap` is an error: refusing mirrors the
/// infeasibility the construction relies on at large `m - n`.
pub fn solutions_in_box_capped(
    a1: &BigUint,
    a2: &BigUint,
    g: &BigUint,
    lo: &BigUint,
    hi: &BigUint,
    cap: u128,
) -> Result<Vec<(BigUint, BigUint)>> {
    if lo >= hi {
        return Err(Error::InvalidParameter(format!(
            "box bounds must satisfy lo < hi (got {lo} >= {hi})"
        )));
    }
    if a1.is_zero() || a2.is_zero() {
        return Err(Error::InvalidParameter(
            "box enumeration needs positive coefficients".into(),
        ));
    }
    let line = general_solution(a1, a2, g)?;
    let u0 = BigInt::from(line.u0.clone());
    let a1_s = BigInt::from(a1.clone());
    let a2_s = BigInt::from(a2.clone());
    let lo_s = BigInt::from(lo.clone());
    let hi_s = BigInt::from(hi.clone());

    // lo < u0 + A2*t < hi  and  lo < v0 - A1*t < hi, all strict.
    let one = BigInt::one();
    let t_min_u = floor_div(&(&lo_s - &u0), &a2_s) + &one;
    let t_max_u = ceil_div(&(&hi_s - &u0), &a2_s) - &one;
    let t_min_v = floor_div(&(&line.v0 - &hi_s), &a1_s) + &one;
    let t_max_v = ceil_div(&(&line.v0 - &lo_s), &a1_s) - &one;

    let t_lo = t_min_u.max(t_min_v);
    let t_hi = t_max_u.min(t_max_v);
    if t_lo > t_hi {
        return Ok(Vec::new());
    }
    let width = &t_hi - &t_lo + &one;
    match width.to_u128() {
        Some(w) if w <= cap => {}
        _ => {
            return Err(Error::EnumerationCapExceeded {
                width: width.to_string(),
                cap,
            })
        }
    }

    let mut out = Vec::new();
    let mut t = t_lo;
    while t <= t_hi {
        let (u, v) = line.point_at(&t);
        debug_assert!(u > lo_s && u < hi_s && v > lo_s && v < hi_s);
        let u = u.to_biguint().expect("strictly above lo >= 0");
        let v = v.to_biguint().expect("strictly above lo >= 0");
        debug_assert_eq!(a1 * &u + a2 * &v, *g);
        out.push((u, v));
        t += 1;
    }
    Ok(out)
}

/// Predicted width of the `u`-feasible `t`-window, `2^(m-n-2)`.
///
/// This is the estimate the infeasibility argument leans on; requires
/// `m >= n + 2`.
pub fn expected_t_width(m: u32, n: u32) -> Result<BigUint> {
    if m < n + 2 {
        return Err(Error::InvalidParameter(format!(
            "expected_t_width needs m >= n + 2 (got m={m}, n={n})"
        )));
    }
    Ok(BigUint::one() << (m - n - 2))
}

/// Build an instance from a known in-box pair: fresh coprime n-bit
/// coefficients, `u, v` drawn strictly inside `(2^(m-1), 2^m - 1)`, and
/// `G` evaluated from them. Returns the instance and the planted pair.
pub fn plant_instance<R: Rng + ?Sized>(
    n: u32,
    m: u32,
    rng: &mut R,
) -> Result<(BfhpInstance, (BigUint, BigUint))> {
    if m <= n || m < 3 {
        return Err(Error::InvalidParameter(format!(
            "planting needs m > n and m >= 3 (got n={n}, m={m})"
        )));
    }
    let pair = sample_pairwise_coprime(2, n, &[], rng)?;
    let (a1, a2) = (pair[0].clone(), pair[1].clone());
    let inner_lo = (BigUint::one() << (m - 1)) + 1u32;
    let inner_hi = (BigUint::one() << m) - 1u32; // exclusive; keeps u,v < 2^m - 1
    let u = rng.gen_biguint_range(&inner_lo, &inner_hi);
    let v = rng.gen_biguint_range(&inner_lo, &inner_hi);
    let g = &a1 * &u + &a2 * &v;
    Ok((BfhpInstance { a1, a2, m, n, g }, (u, v)))
}

/// Outcome of the uniqueness-probability experiment.
///
/// Each trial draws fresh coprime n-bit coefficients and two distinct
/// m-bit values `u1, u2`; a hit means the colliding `v2` would be an
/// integer, i.e. `A2 | (u1 - u2)`. The exact per-trial hit probability is
/// accumulated alongside, so the empirical rate can be checked against
/// its own binomial error bars and against the `2^-n` rule of thumb.
#[derive(Debug, Clone, Copy)]
pub struct CollisionReport {
    pub trials: u64,
    pub hits: u64,
    sum_rate: f64,
    sum_var: f64,
}

impl CollisionReport {
    /// Observed hit fraction.
    pub fn empirical_rate(&self) -> f64 {
        self.hits as f64 / self.trials as f64
    }

    /// Mean of the exact per-trial hit probabilities.
    pub fn expected_rate(&self) -> f64 {
        self.sum_rate / self.trials as f64
    }

    /// Standard deviation of the hit fraction under the exact per-trial rates.
    pub fn std_dev(&self) -> f64 {
        self.sum_var.sqrt() / self.trials as f64
    }
}

/// Estimate how often two distinct `u` draws collide into the same `G`.
pub fn collision_experiment<R: Rng + ?Sized>(
    n: u32,
    m: u32,
    trials: u64,
    rng: &mut R,
) -> Result<CollisionReport> {
    if n < 3 || m <= n || trials == 0 {
        return Err(Error::InvalidParameter(format!(
            "collision experiment needs n >= 3, m > n, trials >= 1 (got n={n}, m={m}, trials={trials})"
        )));
    }
    let lo = (BigUint::one() << (m - 1)) + 1u32;
    let hi = BigUint::one() << m;
    // Sampling set {2^(m-1)+1, ..., 2^m - 1} has 2^(m-1) - 1 elements.
    let set_size = (BigUint::one() << (m - 1)) - 1u32;
    let one = BigUint::one();

    let mut hits = 0u64;
    let mut sum_rate = 0.0f64;
    let mut sum_var = 0.0f64;
    for _ in 0..trials {
        let pair = sample_pairwise_coprime(2, n, &[], rng)?;
        let a2 = &pair[1];
        let u1 = rng.gen_biguint_range(&lo, &hi);
        let u2 = loop {
            let c = rng.gen_biguint_range(&lo, &hi);
            if c != u1 {
                break c;
            }
        };
        let _v1 = rng.gen_biguint_range(&lo, &hi);
        let diff = if u1 > u2 { &u1 - &u2 } else { &u2 - &u1 };
        if (diff % a2).is_zero() {
            hits += 1;
        }

        // Exact rate for this A2: over ordered pairs u1 != u2 from a
        // contiguous set of W values, W mod A2 residue classes hold
        // ceil(W/A2) values and the rest floor(W/A2).
        let (q, r) = set_size.div_rem(a2);
        let same_class_pairs = &r * (&q + &one) * &q + (a2 - &r) * &q * (&q - &one);
        let all_pairs = &set_size * (&set_size - &one);
        let rate = same_class_pairs.to_f64().unwrap() / all_pairs.to_f64().unwrap();
        sum_rate += rate;
        sum_var += rate * (1.0 - rate);
    }
    Ok(CollisionReport {
        trials,
        hits,
        sum_rate,
        sum_var,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    // Independent oracle: scan the whole open box.
    fn brute_force_box(a1: u64, a2: u64, g: u64, lo: u64, hi: u64) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for u in (lo + 1)..hi {
            for v in (lo + 1)..hi {
                if a1 * u + a2 * v == g {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn as_u64_pairs(pairs: &[(BigUint, BigUint)]) -> Vec<(u64, u64)> {
        pairs
            .iter()
            .map(|(u, v)| (u.to_u64().unwrap(), v.to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn eval_form_direct() {
        assert_eq!(eval_form(&big(13), &big(11), &big(40), &big(50)).unwrap(), big(1070));
        assert_eq!(eval_form(&big(13), &big(11), &big(0), &big(0)).unwrap(), big(0));
        assert_eq!(eval_form(&big(17), &big(19), &big(1), &big(1)).unwrap(), big(36));
    }

    #[test]
    fn eval_form_rejects_common_factor() {
        assert!(matches!(
            eval_form(&big(6), &big(9), &big(1), &big(1)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn general_solution_normalized() {
        let line = general_solution(&big(13), &big(11), &big(1070)).unwrap();
        assert_eq!(line.u0, big(7));
        assert_eq!(line.v0, BigInt::from(89));
        assert_eq!(line.step_u, big(11));
        assert_eq!(line.step_v, big(13));

        let line = general_solution(&big(1), &big(2), &big(0)).unwrap();
        assert_eq!(line.u0, big(0));
        assert_eq!(line.v0, BigInt::zero());

        let line = general_solution(&big(13), &big(11), &big(13)).unwrap();
        assert_eq!(line.u0, big(1));
        assert_eq!(line.v0, BigInt::zero());
    }

    #[test]
    fn box_solutions_match_brute_force() {
        // Oracle: brute_force_box(13, 11, 1070, 32, 63) = [(40, 50), (51, 37)].
        let expect = brute_force_box(13, 11, 1070, 32, 63);
        assert_eq!(expect, vec![(40, 50), (51, 37)]);
        let got = solutions_in_box(&big(13), &big(11), &big(1070), &big(32), &big(63)).unwrap();
        assert_eq!(as_u64_pairs(&got), expect);
    }

    #[test]
    fn box_solutions_sub_box() {
        // No pair has both coordinates inside (48, 63): u=51 pairs with
        // v=37 and u=62 with v=24. The oracle confirms the empty answer.
        let expect = brute_force_box(13, 11, 1070, 48, 63);
        assert_eq!(expect, Vec::<(u64, u64)>::new());
        let got = solutions_in_box(&big(13), &big(11), &big(1070), &big(48), &big(63)).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn box_solutions_target_too_small() {
        let got = solutions_in_box(&big(13), &big(11), &big(5), &big(32), &big(63)).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn box_solutions_rejects_bad_bounds() {
        assert!(solutions_in_box(&big(13), &big(11), &big(5), &big(63), &big(32)).is_err());
        // gcd(0, 1) = 1 but a zero coefficient has no t-window to intersect.
        assert!(solutions_in_box(&big(0), &big(1), &big(5), &big(1), &big(9)).is_err());
    }

    #[test]
    fn box_solutions_strictly_inside() {
        let mut rng = rng::seeded(11);
        for _ in 0..50 {
            let (inst, _) = plant_instance(4, 9, &mut rng).unwrap();
            let lo = big(1) << (inst.m - 1);
            let hi = (big(1) << inst.m) - 1u32;
            for (u, v) in solutions_in_box(&inst.a1, &inst.a2, &inst.g, &lo, &hi).unwrap() {
                assert!(u > lo && u < hi);
                assert!(v > lo && v < hi);
                assert_eq!(&inst.a1 * &u + &inst.a2 * &v, inst.g);
            }
        }
    }

    #[test]
    fn planted_instances_recovered() {
        let mut rng = rng::seeded(12);
        for (n, m) in [(3u32, 6u32), (4, 8), (5, 8), (6, 8)] {
            for _ in 0..40 {
                let (inst, planted) = plant_instance(n, m, &mut rng).unwrap();
                let lo = big(1) << (m - 1);
                let hi = (big(1) << m) - 1u32;
                let got = solutions_in_box(&inst.a1, &inst.a2, &inst.g, &lo, &hi).unwrap();
                assert!(got.contains(&planted), "planted pair missing");
                let brute = brute_force_box(
                    inst.a1.to_u64().unwrap(),
                    inst.a2.to_u64().unwrap(),
                    inst.g.to_u64().unwrap(),
                    lo.to_u64().unwrap(),
                    hi.to_u64().unwrap(),
                );
                assert_eq!(as_u64_pairs(&got), brute);
            }
        }
    }

    #[test]
    fn enumeration_cap_refuses_wide_windows() {
        // a1=3, a2=2, G = 3*2^40: the t-window across (1, 2^40) is ~2^39 wide.
        let g = big(3) * (big(1) << 40);
        let err =
            solutions_in_box(&big(3), &big(2), &g, &big(1), &(big(1) << 40)).unwrap_err();
        assert!(matches!(err, Error::EnumerationCapExceeded { .. }));
    }

    #[test]
    fn t_width_values() {
        assert_eq!(expected_t_width(6, 4).unwrap(), big(1));
        assert_eq!(expected_t_width(16, 6).unwrap(), big(256));
        // m - n - 1 = 129 puts the window at 2^128.
        let w = expected_t_width(139, 9).unwrap();
        assert_eq!(w, BigUint::one() << 128);
        assert!(expected_t_width(5, 4).is_err());
    }

    #[test]
    fn mean_solution_count_tracks_window_estimate() {
        // Order-of-magnitude check of the 2^(m-n-2) window estimate.
        let mut rng = rng::seeded(13);
        let n = 4u32;
        for gap in 3..=8u32 {
            let m = n + gap;
            let mut total = 0u64;
            let instances = 200;
            for _ in 0..instances {
                let (inst, _) = plant_instance(n, m, &mut rng).unwrap();
                let lo = big(1) << (m - 1);
                let hi = (big(1) << m) - 1u32;
                let sols = solutions_in_box(&inst.a1, &inst.a2, &inst.g, &lo, &hi).unwrap();
                total += sols.len() as u64;
            }
            let mean = total as f64 / instances as f64;
            let predicted = expected_t_width(m, n).unwrap().to_f64().unwrap();
            assert!(
                mean / predicted <= 4.0 && predicted / mean <= 4.0,
                "gap {gap}: mean {mean} vs predicted {predicted}"
            );
        }
    }

    #[test]
    fn single_trial_fraction_is_bernoulli() {
        let mut rng = rng::seeded(14);
        let report = collision_experiment(3, 10, 1, &mut rng).unwrap();
        let f = report.empirical_rate();
        assert!(f == 0.0 || f == 1.0);
    }

    #[test]
    fn collision_rate_matches_exact_small() {
        let mut rng = rng::seeded(15);
        let report = collision_experiment(3, 10, 20_000, &mut rng).unwrap();
        let diff = (report.empirical_rate() - report.expected_rate()).abs();
        assert!(
            diff <= 5.0 * report.std_dev(),
            "empirical {} vs expected {} (sigma {})",
            report.empirical_rate(),
            report.expected_rate(),
            report.std_dev()
        );
    }

    proptest! {
        #[test]
        fn line_identity_telescopes(
            seed in 0u64..500,
            g in 0u64..1_000_000u64,
            t in -100i64..100i64,
        ) {
            let mut rng = rng::seeded(seed);
            let pair = sample_pairwise_coprime(2, 6, &[], &mut rng).unwrap();
            let (a1, a2) = (&pair[0], &pair[1]);
            let line = general_solution(a1, a2, &big(g)).unwrap();
            let (u, v) = line.point_at(&BigInt::from(t));
            let lhs = BigInt::from(a1.clone()) * u + BigInt::from(a2.clone()) * v;
            prop_assert_eq!(lhs, BigInt::from(g));
        }
    }
}
