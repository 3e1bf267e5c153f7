//! Bounded bivariate linear Diophantine problems and a hybrid asymmetric
//! cryptosystem built on them.
//!
//! The library has three layers:
//!
//! - [`numtheory`] — exact big-integer primitives: probable-prime generation,
//!   extended Euclid, integer roots, pairwise-coprime sampling.
//! - [`diophantine`] — the two-variable linear form `G = A1*u + A2*v` with
//!   coprime coefficients: general solution line, exhaustive in-box solution
//!   enumeration at desk scale, and the collision-rate experiment behind the
//!   uniqueness claim.
//! - [`scheme`] — a two-party public-key scheme whose keys are bivariate
//!   combinations of secrets lifted above a common prime, with a
//!   multiply-and-reduce shared secret and a hash-keystream hybrid layer.
//!   [`rsa`] shows the same bivariate structure hiding inside textbook RSA.
//!
//! [`format`] defines the binary file formats used by the `bfhp` CLI and
//! [`bench`] measures per-operation timings and transmitted-size ratios.
//!
//! Every quantity is an exact non-negative integer ([`num_bigint::BigUint`]);
//! signed values appear only on solution lines and in extended-GCD output.
//! All randomized operations take the random source as an explicit argument,
//! so every function here is pure and thread-safe.

pub mod bench;
pub mod diophantine;
pub mod error;
pub mod format;
pub mod numtheory;
pub mod rng;
pub mod rsa;
pub mod scheme;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
