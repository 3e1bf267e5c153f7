//! The two-party asymmetric scheme.
//!
//! Both parties share an n-bit prime `p` and two public coprime pairs
//! `(g1, g2)` and `(g3, g4)`. A key pair is built from a private n-bit
//! scalar `d`: the residues `g_i * d mod p` are lifted into the 2n-bit
//! range by adding `k_i * p` for fresh n-bit multipliers `k_i`, and the
//! public key is the bivariate combination of the two lifted secrets
//! under the *other* party's coefficient pair. Multiplying the peer's
//! public key by one's own scalar mod p lands both sides on the same
//! value, because the lifts vanish mod p.
//!
//! Encryption is hybrid: the shared value masks the message additively
//! mod p (`C1`), and a hash-derived keystream encrypts the message bytes
//! (`C2`). Decryption recovers the message both ways and aborts on any
//! disagreement, which is what makes bit flips in transit detectable.
//!
//! Key pairs are cheap to generate and immutable; whether a key is used
//! per message or per session is left to the caller.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::numtheory::{gen_prime, sample_bits, sample_pairwise_coprime};
use crate::Result;

const LIFT_BUDGET: u64 = 10_000;

/// Common values: the security size `n`, the n-bit prime, and the two
/// public coprime pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicParams {
    pub n: u32,
    pub p: BigUint,
    pub g1: BigUint,
    pub g2: BigUint,
    pub g3: BigUint,
    pub g4: BigUint,
}

impl PublicParams {
    fn g(&self) -> [&BigUint; 4] {
        [&self.g1, &self.g2, &self.g3, &self.g4]
    }

    /// Check every structural invariant: prime size and primality, the
    /// g values' range, pairwise coprimality, and distinctness from p.
    pub fn validate<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<()> {
        let lo = BigUint::from(1u32) << (self.n - 1);
        let hi = BigUint::from(1u32) << self.n;
        if !(self.p > lo && self.p < hi) {
            return Err(Error::InvalidParameter("prime outside its bit range".into()));
        }
        if !crate::numtheory::is_probable_prime(&self.p, crate::numtheory::MILLER_RABIN_ROUNDS, rng)
        {
            return Err(Error::InvalidParameter("p is not prime".into()));
        }
        let g = self.g();
        for (i, gi) in g.iter().enumerate() {
            if !(**gi > lo && **gi < hi) {
                return Err(Error::InvalidParameter(format!("g{} outside its bit range", i + 1)));
            }
            if **gi == self.p {
                return Err(Error::InvalidParameter(format!("g{} equals p", i + 1)));
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if !num_integer::Integer::gcd(g[i], g[j]).eq(&BigUint::from(1u32)) {
                    return Err(Error::InvalidParameter(format!(
                        "g{} and g{} share a factor",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Sender-side key pair: scalar `d`, lift multipliers `k1, k2`, lifted
/// secrets `alpha1, alpha2`, and the public key `g3*alpha1 + g4*alpha2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SenderKeyPair {
    pub d: BigUint,
    pub k1: BigUint,
    pub k2: BigUint,
    pub alpha1: BigUint,
    pub alpha2: BigUint,
    pub e_pub: BigUint,
}

/// Recipient-side mirror: residues come from `(g3, g4)` and the public
/// key combines under `(g1, g2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecipientKeyPair {
    pub d: BigUint,
    pub k1: BigUint,
    pub k2: BigUint,
    pub beta1: BigUint,
    pub beta2: BigUint,
    pub e_pub: BigUint,
}

/// What actually travels: the additive mask residue, the keystream
/// ciphertext (same length as the encoded message), and the sender's
/// public key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiphertextBundle {
    pub c1: BigUint,
    pub c2: Vec<u8>,
    pub e_a: BigUint,
}

/// Agreement value together with the symmetric key derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedSecret {
    pub value: BigUint,
    pub sk: [u8; 32],
}

impl SharedSecret {
    pub fn new(value: BigUint) -> Self {
        let sk = kdf(&value);
        SharedSecret { value, sk }
    }
}

/// Generate the common values: an n-bit prime and four pairwise-coprime
/// n-bit integers distinct from it. Needs n >= 5 in practice; smaller n
/// cannot host four coprime values next to a distinct prime and fails
/// with a sampling error.
pub fn setup<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<PublicParams> {
    let p = gen_prime(n, rng);
    let exclude = [p.clone()];
    let g = sample_pairwise_coprime(4, n, &exclude, rng)?;
    let mut it = g.into_iter();
    Ok(PublicParams {
        n,
        p,
        g1: it.next().unwrap(),
        g2: it.next().unwrap(),
        g3: it.next().unwrap(),
        g4: it.next().unwrap(),
    })
}

fn in_bit_range(x: &BigUint, bits: u32) -> bool {
    *x > (BigUint::from(1u32) << (bits - 1)) && *x < (BigUint::from(1u32) << bits)
}

fn in_lift_range(x: &BigUint, n: u32) -> bool {
    // Strictly inside (2^(2n-1), 2^(2n) - 1), both endpoints excluded, so
    // the secret pair always sits strictly inside the recovery box.
    *x > (BigUint::from(1u32) << (2 * n - 1)) && *x < ((BigUint::from(1u32) << (2 * n)) - 1u32)
}

/// Lift `residue` into the 2n-bit window by trying fresh n-bit multipliers.
fn lift_secret<R: Rng + ?Sized>(
    residue: &BigUint,
    params: &PublicParams,
    avoid: Option<&BigUint>,
    rng: &mut R,
) -> Result<(BigUint, BigUint)> {
    for _ in 0..LIFT_BUDGET {
        let k = sample_bits(params.n, rng);
        if avoid == Some(&k) {
            continue;
        }
        let secret = residue + &k * &params.p;
        if in_lift_range(&secret, params.n) {
            return Ok((k, secret));
        }
    }
    Err(Error::SamplingExhausted { attempts: LIFT_BUDGET })
}

impl SenderKeyPair {
    /// Deterministic construction from explicit components; validates the
    /// component ranges, `k1 != k2`, and the lifted-secret window.
    pub fn from_components(
        params: &PublicParams,
        d: BigUint,
        k1: BigUint,
        k2: BigUint,
    ) -> Result<Self> {
        check_components(params, &d, &k1, &k2)?;
        let alpha1 = (&params.g1 * &d) % &params.p + &k1 * &params.p;
        let alpha2 = (&params.g2 * &d) % &params.p + &k2 * &params.p;
        if !in_lift_range(&alpha1, params.n) || !in_lift_range(&alpha2, params.n) {
            return Err(Error::InvalidParameter(
                "lifted secret outside the 2n-bit window".into(),
            ));
        }
        let e_pub = &params.g3 * &alpha1 + &params.g4 * &alpha2;
        Ok(SenderKeyPair { d, k1, k2, alpha1, alpha2, e_pub })
    }
}

impl RecipientKeyPair {
    /// Mirror of [`SenderKeyPair::from_components`] with the g pairs swapped.
    pub fn from_components(
        params: &PublicParams,
        d: BigUint,
        k1: BigUint,
        k2: BigUint,
    ) -> Result<Self> {
        check_components(params, &d, &k1, &k2)?;
        let beta1 = (&params.g3 * &d) % &params.p + &k1 * &params.p;
        let beta2 = (&params.g4 * &d) % &params.p + &k2 * &params.p;
        if !in_lift_range(&beta1, params.n) || !in_lift_range(&beta2, params.n) {
            return Err(Error::InvalidParameter(
                "lifted secret outside the 2n-bit window".into(),
            ));
        }
        let e_pub = &params.g1 * &beta1 + &params.g2 * &beta2;
        Ok(RecipientKeyPair { d, k1, k2, beta1, beta2, e_pub })
    }
}

fn check_components(
    params: &PublicParams,
    d: &BigUint,
    k1: &BigUint,
    k2: &BigUint,
) -> Result<()> {
    for (name, v) in [("d", d), ("k1", k1), ("k2", k2)] {
        if !in_bit_range(v, params.n) {
            return Err(Error::InvalidParameter(format!("{name} is not an n-bit value")));
        }
    }
    if k1 == k2 {
        return Err(Error::InvalidParameter("lift multipliers must be distinct".into()));
    }
    Ok(())
}

/// Fresh sender key pair under the given parameters.
pub fn keygen_sender<R: Rng + ?Sized>(params: &PublicParams, rng: &mut R) -> Result<SenderKeyPair> {
    let d = sample_bits(params.n, rng);
    let r1 = (&params.g1 * &d) % &params.p;
    let r2 = (&params.g2 * &d) % &params.p;
    let (k1, alpha1) = lift_secret(&r1, params, None, rng)?;
    let (k2, alpha2) = lift_secret(&r2, params, Some(&k1), rng)?;
    let e_pub = &params.g3 * &alpha1 + &params.g4 * &alpha2;
    Ok(SenderKeyPair { d, k1, k2, alpha1, alpha2, e_pub })
}

/// Fresh recipient key pair under the given parameters.
pub fn keygen_recipient<R: Rng + ?Sized>(
    params: &PublicParams,
    rng: &mut R,
) -> Result<RecipientKeyPair> {
    let d = sample_bits(params.n, rng);
    let r1 = (&params.g3 * &d) % &params.p;
    let r2 = (&params.g4 * &d) % &params.p;
    let (k1, beta1) = lift_secret(&r1, params, None, rng)?;
    let (k2, beta2) = lift_secret(&r2, params, Some(&k1), rng)?;
    let e_pub = &params.g1 * &beta1 + &params.g2 * &beta2;
    Ok(RecipientKeyPair { d, k1, k2, beta1, beta2, e_pub })
}

/// Sender-side agreement value: `d_A * e_B mod p`.
pub fn shared_from_sender(d_a: &BigUint, e_b: &BigUint, p: &BigUint) -> BigUint {
    (d_a * e_b) % p
}

/// Recipient-side agreement value: `d_B * e_A mod p`. Equal to the
/// sender's for matched key pairs under common parameters.
pub fn shared_from_recipient(d_b: &BigUint, e_a: &BigUint, p: &BigUint) -> BigUint {
    (d_b * e_a) % p
}

/// Minimal big-endian encoding; the zero message encodes as no bytes.
pub fn encode_message(m: &BigUint) -> Vec<u8> {
    if m.is_zero() {
        Vec::new()
    } else {
        m.to_bytes_be()
    }
}

/// Inverse of [`encode_message`]; rejects non-minimal (leading-zero) input.
pub fn decode_message(bytes: &[u8]) -> Result<BigUint> {
    if bytes.is_empty() {
        return Ok(BigUint::zero());
    }
    if bytes[0] == 0 {
        return Err(Error::Format("message encoding has a leading zero byte".into()));
    }
    Ok(BigUint::from_bytes_be(bytes))
}

/// 32-byte symmetric key: SHA-256 over the minimal big-endian encoding of
/// the shared value (the empty string for zero).
pub fn kdf(shared: &BigUint) -> [u8; 32] {
    let digest = Sha256::digest(encode_message(shared));
    digest.into()
}

/// XOR `data` against the keystream `SHA-256(sk || BE64(0)) ||
/// SHA-256(sk || BE64(1)) || ...` truncated to `data`'s length.
/// Involution: applying it twice restores the input.
pub fn keystream_xor(sk: &[u8; 32], data: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(data.len());
    let mut counter: u64 = 0;
    while out.len() < data.len() {
        let mut hasher = Sha256::new();
        hasher.update(sk);
        hasher.update(counter.to_be_bytes());
        let block = hasher.finalize();
        for &byte in block.iter() {
            if out.len() == data.len() {
                break;
            }
            out.push(data[out.len()] ^ byte);
        }
        counter += 1;
    }
    out
}

/// Encrypt `m` (< p) to the holder of `e_b`.
///
/// `C1 = (M + e_AB) mod p`; `C2` is the keystream ciphertext of the
/// encoded message under `sk = kdf(e_AB)`; the bundle carries the
/// sender's public key.
pub fn encrypt(
    params: &PublicParams,
    sender: &SenderKeyPair,
    e_b: &BigUint,
    m: &BigUint,
) -> Result<CiphertextBundle> {
    if m >= &params.p {
        return Err(Error::MessageTooLarge);
    }
    let shared = SharedSecret::new(shared_from_sender(&sender.d, e_b, &params.p));
    let c1 = (m + &shared.value) % &params.p;
    let c2 = keystream_xor(&shared.sk, &encode_message(m));
    Ok(CiphertextBundle { c1, c2, e_a: sender.e_pub.clone() })
}

/// Decrypt a bundle, recovering the message twice and insisting the two
/// agree.
///
/// The additive path gives `M' = (C1 - e_BA) mod p`; the symmetric path
/// decodes the keystream plaintext. Any mismatch — including a
/// non-minimal decoded encoding — is an integrity abort, a distinguished
/// outcome rather than a crash. A bundle with `C1 >= p` is malformed
/// input, reported separately.
pub fn decrypt(
    params: &PublicParams,
    recipient: &RecipientKeyPair,
    bundle: &CiphertextBundle,
) -> Result<BigUint> {
    if bundle.c1 >= params.p {
        return Err(Error::Format("bundle C1 is not below the prime".into()));
    }
    let shared = SharedSecret::new(shared_from_recipient(
        &recipient.d,
        &bundle.e_a,
        &params.p,
    ));
    let m_additive = (&bundle.c1 + &params.p - &shared.value) % &params.p;
    let m_symmetric = match decode_message(&keystream_xor(&shared.sk, &bundle.c2)) {
        Ok(m) => m,
        Err(_) => return Err(Error::IntegrityAbort),
    };
    if m_symmetric != m_additive {
        return Err(Error::IntegrityAbort);
    }
    Ok(m_additive)
}
