//! Two parties derive the same secret from each other's public keys.
//!
//! Run: cargo run -p bfhp --example key_agreement

use bfhp::{rng, scheme};

fn main() {
    let n = 64;
    let mut rng = rng::seeded(42);

    let params = scheme::setup(n, &mut rng).unwrap();
    println!("common prime p  = {}", params.p);
    println!("coprime pairs   = ({}, {}) and ({}, {})", params.g1, params.g2, params.g3, params.g4);

    let alice = scheme::keygen_sender(&params, &mut rng).unwrap();
    let bob = scheme::keygen_recipient(&params, &mut rng).unwrap();
    println!("sender pubkey   = {} ({} bits, 3n = {})", alice.e_pub, alice.e_pub.bits(), 3 * n);
    println!("recipient pubkey= {} ({} bits)", bob.e_pub, bob.e_pub.bits());

    // Each side multiplies the peer's public key by its own scalar mod p.
    let from_alice = scheme::shared_from_sender(&alice.d, &bob.e_pub, &params.p);
    let from_bob = scheme::shared_from_recipient(&bob.d, &alice.e_pub, &params.p);
    println!("alice derives   = {from_alice}");
    println!("bob derives     = {from_bob}");
    assert_eq!(from_alice, from_bob);

    // Why it works: the lifts k_i * p vanish mod p, so both sides reduce
    // to d_A * d_B * (g1*g3 + g2*g4) mod p.
    let expanded = (&alice.d * &bob.d * (&params.g1 * &params.g3 + &params.g2 * &params.g4))
        % &params.p;
    assert_eq!(expanded, from_alice);
    println!("expanded form   = {expanded} (matches)");

    let secret = scheme::SharedSecret::new(from_alice);
    println!("derived sk      = {}", hex(&secret.sk));
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
