//! Timing and size-ratio measurements.
//!
//! For each requested size the harness generates one parameter set, one
//! key pair per side, and one full-width message, then times keygen,
//! encrypt, decrypt, and an n-bit modular-exponentiation baseline (the
//! per-operation cost profile of exponentiation-based schemes). Timings
//! are medians over at least [`MIN_TIMED_RUNS`] runs after
//! [`WARMUP_RUNS`] warmups, run sequentially to avoid contention noise.
//!
//! Size ratios come from measured encoded byte lengths, not formulas:
//! `ratio_mc` is total transmitted bytes (C1 + C2 + e_A) over message
//! bytes, `ratio_me` is public-key bytes over message bytes. With the
//! same seed, every non-timing column reproduces byte-identically.

use num_bigint::{BigUint, RandBigInt};
use num_traits::One;
use rand::Rng;
use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use crate::error::Error;
use crate::scheme::{self, encode_message};
use crate::Result;

pub const WARMUP_RUNS: usize = 3;
pub const MIN_TIMED_RUNS: usize = 11;

/// One measurement: a size, an operation, its median wall time, and the
/// size columns shared by all rows of that size.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: u32,
    pub op: &'static str,
    pub median_ns: u128,
    pub msg_bits: u64,
    pub ct_bits: u64,
    pub pubkey_bits: u64,
    pub ratio_mc: f64,
    pub ratio_me: f64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// CSV with a fixed header; ratios printed to four decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,op,median_ns,msg_bits,ct_bits,pubkey_bits,ratio_mc,ratio_me\n");
        for row in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{:.4},{:.4}",
                row.n,
                row.op,
                row.median_ns,
                row.msg_bits,
                row.ct_bits,
                row.pubkey_bits,
                row.ratio_mc,
                row.ratio_me
            )
            .unwrap();
        }
        out
    }

    /// Median time of one op at one size, if present.
    pub fn median_ns(&self, n: u32, op: &str) -> Option<u128> {
        self.rows.iter().find(|r| r.n == n && r.op == op).map(|r| r.median_ns)
    }
}

fn median_time<F: FnMut()>(mut f: F, timed_runs: usize) -> u128 {
    for _ in 0..WARMUP_RUNS {
        f();
    }
    let runs = timed_runs.max(MIN_TIMED_RUNS);
    let mut samples = Vec::with_capacity(runs);
    for _ in 0..runs {
        let start = Instant::now();
        f();
        samples.push(start.elapsed().as_nanos());
    }
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Run the harness over the given sizes. Sizes below 64 are rejected.
pub fn bench_run<R: Rng + ?Sized>(
    sizes: &[u32],
    timed_runs: usize,
    rng: &mut R,
) -> Result<BenchReport> {
    if sizes.is_empty() {
        return Err(Error::InvalidParameter("no sizes given".into()));
    }
    if let Some(bad) = sizes.iter().find(|&&n| n < 64) {
        return Err(Error::InvalidParameter(format!(
            "bench sizes must be >= 64 (got {bad})"
        )));
    }

    let mut report = BenchReport::default();
    for &n in sizes {
        let params = scheme::setup(n, rng)?;
        let sender = scheme::keygen_sender(&params, rng)?;
        let recipient = scheme::keygen_recipient(&params, rng)?;

        // Full-width message: exactly n bits and below p.
        let msg_lo = (BigUint::one() << (n - 1)) + 1u32;
        let message = if msg_lo < params.p {
            rng.gen_biguint_range(&msg_lo, &params.p)
        } else {
            &params.p - 1u32
        };
        let bundle = scheme::encrypt(&params, &sender, &recipient.e_pub, &message)?;

        let msg_bytes = encode_message(&message).len() as u64;
        let c1_bytes = encode_message(&bundle.c1).len() as u64;
        let ea_bytes = encode_message(&bundle.e_a).len() as u64;
        let ct_bytes = c1_bytes + bundle.c2.len() as u64 + ea_bytes;
        let msg_bits = 8 * msg_bytes;
        let ct_bits = 8 * ct_bytes;
        let pubkey_bits = sender.e_pub.bits();
        let ratio_mc = ct_bytes as f64 / msg_bytes as f64;
        let ratio_me = ea_bytes as f64 / msg_bytes as f64;

        // Baseline operands: n-bit base and exponent, odd n-bit modulus.
        let base = crate::numtheory::sample_bits(n, rng);
        let exponent = crate::numtheory::sample_bits(n, rng);
        let modulus = crate::numtheory::sample_bits(n, rng) | BigUint::one();

        let row = |op: &'static str, median_ns: u128| BenchRow {
            n,
            op,
            median_ns,
            msg_bits,
            ct_bits,
            pubkey_bits,
            ratio_mc,
            ratio_me,
        };

        let mut keygen_rng = crate::rng::seeded(u64::from(n) ^ 0x6b65_7967);
        let keygen_ns = median_time(
            || {
                black_box(scheme::keygen_sender(&params, &mut keygen_rng).unwrap());
            },
            timed_runs,
        );
        report.rows.push(row("keygen", keygen_ns));

        let encrypt_ns = median_time(
            || {
                black_box(
                    scheme::encrypt(&params, &sender, &recipient.e_pub, &message).unwrap(),
                );
            },
            timed_runs,
        );
        report.rows.push(row("encrypt", encrypt_ns));

        let decrypt_ns = median_time(
            || {
                black_box(scheme::decrypt(&params, &recipient, &bundle).unwrap());
            },
            timed_runs,
        );
        report.rows.push(row("decrypt", decrypt_ns));

        let modexp_ns = median_time(
            || {
                black_box(base.modpow(&exponent, &modulus));
            },
            timed_runs,
        );
        report.rows.push(row("modexp", modexp_ns));
    }
    Ok(report)
}
