//! Hybrid encryption round trip, then three tampering attempts that all
//! hit the integrity abort.
//!
//! Run: cargo run -p bfhp --example hybrid_roundtrip

use bfhp::{rng, scheme, Error};
use num_bigint::BigUint;
use num_traits::One;

fn main() {
    let mut rng = rng::seeded(7);
    let params = scheme::setup(128, &mut rng).unwrap();
    let sender = scheme::keygen_sender(&params, &mut rng).unwrap();
    let recipient = scheme::keygen_recipient(&params, &mut rng).unwrap();

    let message = BigUint::from_bytes_be(b"attack at dawn");
    assert!(message < params.p);

    let bundle = scheme::encrypt(&params, &sender, &recipient.e_pub, &message).unwrap();
    println!("C1 = {} ({} bits)", bundle.c1, bundle.c1.bits());
    println!("C2 = {} bytes of keystream ciphertext", bundle.c2.len());
    println!("e_A = {} bits", bundle.e_a.bits());

    let recovered = scheme::decrypt(&params, &recipient, &bundle).unwrap();
    assert_eq!(recovered, message);
    println!("decrypted: {:?}", String::from_utf8(scheme::encode_message(&recovered)).unwrap());

    // The message is recovered twice: additively from C1 and through the
    // keystream from C2. Touch any transmitted piece and the two disagree.
    let mut c1_flip = bundle.clone();
    c1_flip.c1 = &bundle.c1 ^ BigUint::one();
    report("flip a bit of C1 ", scheme::decrypt(&params, &recipient, &c1_flip));

    let mut c2_flip = bundle.clone();
    c2_flip.c2[3] ^= 0x80;
    report("flip a bit of C2 ", scheme::decrypt(&params, &recipient, &c2_flip));

    let mut ea_flip = bundle.clone();
    ea_flip.e_a = &bundle.e_a ^ (BigUint::one() << 100);
    report("flip a bit of e_A", scheme::decrypt(&params, &recipient, &ea_flip));
}

fn report(what: &str, outcome: Result<BigUint, Error>) {
    match outcome {
        Err(Error::IntegrityAbort) => println!("{what} -> ABORT (as it should)"),
        Err(e) => println!("{what} -> error: {e}"),
        Ok(m) => println!("{what} -> silently accepted {m} (should never happen)"),
    }
}
