//! Textbook RSA hides the same two-unknown linear structure: C = M^e - N*j.
//! Given the wrap count j, the plaintext falls out as an exact root with
//! no factoring anywhere.
//!
//! Run: cargo run -p bfhp --example rsa_as_diophantine

use bfhp::{rng, rsa};
use num_bigint::{BigUint, RandBigInt};
use num_traits::One;

fn main() {
    let mut rng = rng::seeded(5);
    let key = rsa::toy_rsa_keygen(16, 5, &mut rng).unwrap();
    println!("toy modulus N = {} = {} * {}, e = {}", key.n, key.p, key.q, key.e);

    let message = rng.gen_biguint_range(&BigUint::one(), &key.n);
    let (c, j) = rsa::to_bfhp(&message, key.e, &key.n).unwrap();
    println!("M = {message}");
    println!("C = M^e mod N = {c}");
    println!("j = (M^e - C) / N = {j}");

    let recovered = rsa::solve_given_j(&c, &j, key.e, &key.n).unwrap();
    println!("e-th root of C + N*j = {recovered}");
    assert_eq!(recovered, message);
    assert!(rsa::check_equivalence(&message, key.e, &key.n).unwrap());

    // A wrong wrap count almost never lifts to a perfect power.
    match rsa::solve_given_j(&c, &(&j + 1u32), key.e, &key.n) {
        Err(e) => println!("with j+1 instead: {e}"),
        Ok(m) => println!("with j+1 instead: accidental root {m}"),
    }

    // The predicted window for the line parameter is k(e-1) bits wide;
    // brute-forcing j is as hopeless as brute-forcing M.
    let (lo, hi) = rsa::t_interval(1024, 3).unwrap();
    println!(
        "at k = 1024, e = 3 the predicted j-window spans {} to {} bits",
        lo.bits(),
        hi.bits()
    );
}
