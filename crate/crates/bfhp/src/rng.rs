//! Random-source construction.
//!
//! Every randomized CLI path accepts `--seed`, which drives a ChaCha20
//! stream seeded with `seed_from_u64`; the same seed always reproduces the
//! same keys, parameters, and experiment draws.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// Deterministic generator for a 64-bit seed.
pub fn seeded(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Fresh generator seeded from OS entropy.
pub fn from_entropy() -> ChaCha20Rng {
    ChaCha20Rng::from_entropy()
}
