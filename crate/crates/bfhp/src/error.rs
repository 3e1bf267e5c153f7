//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Extended GCD is undefined for (0, 0).
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    /// The two coefficients of a bivariate form must be coprime.
    #[error("coefficients are not coprime (gcd = {gcd})")]
    NotCoprime { gcd: String },

    /// Rejection sampling ran out of attempts; the bit size is too small
    /// for the requested number of values.
    #[error("sampling failed after {attempts} attempts (bit size too small?)")]
    SamplingExhausted { attempts: u64 },

    /// A parameter violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The intersected solution range is too wide to enumerate; at
    /// cryptographic sizes exhaustive search is exactly what must not work.
    #[error("solution range has {width} candidates, above the cap of {cap}")]
    EnumerationCapExceeded { width: String, cap: u128 },

    /// `C + N*j` is not a perfect e-th power, so (C, j) does not come from
    /// a valid instance.
    #[error("not a valid instance: C + N*j is not a perfect {e}-th power")]
    NotAPerfectPower { e: u32 },

    /// Message must be strictly below the common prime.
    #[error("message is not below the modulus")]
    MessageTooLarge,

    /// Decryption integrity check failed: the two recovered plaintexts
    /// disagree. Distinguished outcome, not a crash.
    #[error("integrity check failed")]
    IntegrityAbort,

    /// A serialized file is malformed (bad magic, kind, version, length
    /// framing, or a non-minimal integer encoding).
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// Exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::IntegrityAbort => 3,
            Error::Format(_) => 4,
            _ => 2,
        }
    }
}
