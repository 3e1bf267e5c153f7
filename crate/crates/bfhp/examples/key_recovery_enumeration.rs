//! Recovering a secret pair from a public key is itself a bounded
//! bivariate problem: e_A = g3*alpha1 + g4*alpha2 with both alphas in the
//! 2n-bit window. At toy sizes we can enumerate every candidate and watch
//! the true pair hide among them.
//!
//! Run: cargo run -p bfhp --example key_recovery_enumeration

use bfhp::{diophantine, rng, scheme};
use num_bigint::BigUint;
use num_traits::One;

fn main() {
    let mut rng = rng::seeded(9);

    for n in [5u32, 6, 7, 8] {
        let params = scheme::setup(n, &mut rng).unwrap();
        let kp = scheme::keygen_sender(&params, &mut rng).unwrap();
        let lo = BigUint::one() << (2 * n - 1);
        let hi = (BigUint::one() << (2 * n)) - 1u32;
        let candidates =
            diophantine::solutions_in_box(&params.g3, &params.g4, &kp.e_pub, &lo, &hi).unwrap();
        let position = candidates
            .iter()
            .position(|(a, b)| *a == kp.alpha1 && *b == kp.alpha2)
            .expect("true secret pair is always on the line");
        println!(
            "n = {n}: e_A = {} -> {} candidate pairs in the 2n-bit box; true pair is #{}",
            kp.e_pub,
            candidates.len(),
            position + 1
        );
        if n == 5 {
            for (a, b) in &candidates {
                let marker = if *a == kp.alpha1 { "  <- secret (alpha1, alpha2)" } else { "" };
                println!("    ({a}, {b}){marker}");
            }
        }
    }

    println!();
    println!(
        "Candidate counts grow like 2^(m-n-2) with m = 2n; at n = 128 the window is ~2^126, \
         which is where enumeration stops being a strategy."
    );
}
