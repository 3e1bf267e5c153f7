//! The whole protocol at pencil-and-paper scale: n = 5, p = 29,
//! g = (17, 19, 21, 23), with every intermediate value printed.
//!
//! Run: cargo run -p bfhp --example worked_micro_instance

use bfhp::scheme::{self, PublicParams, RecipientKeyPair, SenderKeyPair};
use num_bigint::BigUint;

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn main() {
    let params = PublicParams {
        n: 5,
        p: big(29),
        g1: big(17),
        g2: big(19),
        g3: big(21),
        g4: big(23),
    };
    println!("p = {}, G1 = ({}, {}), G2 = ({}, {})", params.p, params.g1, params.g2, params.g3, params.g4);

    // Alice picks d = 20 and lift multipliers 20, 25.
    let alice = SenderKeyPair::from_components(&params, big(20), big(20), big(25)).unwrap();
    println!("\nAlice (sender):");
    println!("  d = {}, k1 = {}, k2 = {}", alice.d, alice.k1, alice.k2);
    println!("  g1*d mod p = {}, g2*d mod p = {}", (&params.g1 * &alice.d) % &params.p, (&params.g2 * &alice.d) % &params.p);
    println!("  alpha1 = {}, alpha2 = {}", alice.alpha1, alice.alpha2);
    println!("  e_A = 21*{} + 23*{} = {}", alice.alpha1, alice.alpha2, alice.e_pub);

    // Bob picks d = 18 and lift multipliers 19, 22.
    let bob = RecipientKeyPair::from_components(&params, big(18), big(19), big(22)).unwrap();
    println!("\nBob (recipient):");
    println!("  d = {}, k1 = {}, k2 = {}", bob.d, bob.k1, bob.k2);
    println!("  beta1 = {}, beta2 = {}", bob.beta1, bob.beta2);
    println!("  e_B = 17*{} + 19*{} = {}", bob.beta1, bob.beta2, bob.e_pub);

    let e_ab = scheme::shared_from_sender(&alice.d, &bob.e_pub, &params.p);
    let e_ba = scheme::shared_from_recipient(&bob.d, &alice.e_pub, &params.p);
    println!("\nshared: d_A*e_B mod p = {e_ab}, d_B*e_A mod p = {e_ba}");
    assert_eq!(e_ab, e_ba);

    let message = big(25);
    let bundle = scheme::encrypt(&params, &alice, &bob.e_pub, &message).unwrap();
    println!("\nencrypt M = {message}:");
    println!("  C1 = (M + {e_ab}) mod {} = {}", params.p, bundle.c1);
    println!("  C2 = {:02x?}", bundle.c2);

    let recovered = scheme::decrypt(&params, &bob, &bundle).unwrap();
    println!("decrypt -> {recovered}");
    assert_eq!(recovered, message);

    let mut tampered = bundle;
    tampered.c1 = big(13);
    println!("decrypt with C1 = 13 -> {:?}", scheme::decrypt(&params, &bob, &tampered).unwrap_err());
}
