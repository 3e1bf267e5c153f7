//! Binary file formats for parameters, keys, and ciphertexts.
//!
//! Every file starts with the same header:
//!
//! ```text
//! magic   5 bytes  "BFHP1"
//! kind    1 byte   0x01 params | 0x02 sender key | 0x03 recipient key | 0x04 ciphertext
//! version 1 byte   0x01
//! n       4 bytes  big-endian security size
//! ```
//!
//! The body is a fixed sequence of length-prefixed fields (4-byte
//! big-endian byte length, then the payload). Integers are stored as
//! minimal big-endian magnitudes — zero is zero-length, and a leading
//! zero byte is rejected on read — so serialization is canonical and
//! re-serializing a decoded value is byte-identical.
//!
//! Field order per kind:
//!
//! - params:        p, g1, g2, g3, g4
//! - sender key:    d, k1, k2, alpha1, alpha2, e_pub
//! - recipient key: d, k1, k2, beta1, beta2, e_pub
//! - ciphertext:    C1, C2 (raw bytes), e_A
//!
//! Decoding validates framing only, not cryptographic invariants.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Error;
use crate::scheme::{CiphertextBundle, PublicParams, RecipientKeyPair, SenderKeyPair};
use crate::Result;

pub const MAGIC: &[u8; 5] = b"BFHP1";
pub const VERSION: u8 = 0x01;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Params = 0x01,
    SenderKey = 0x02,
    RecipientKey = 0x03,
    Ciphertext = 0x04,
}

impl FileKind {
    fn from_byte(b: u8) -> Result<FileKind> {
        match b {
            0x01 => Ok(FileKind::Params),
            0x02 => Ok(FileKind::SenderKey),
            0x03 => Ok(FileKind::RecipientKey),
            0x04 => Ok(FileKind::Ciphertext),
            other => Err(Error::Format(format!("unknown file kind byte 0x{other:02x}"))),
        }
    }
}

/// Report the kind of a serialized blob without decoding the body.
pub fn peek_kind(bytes: &[u8]) -> Result<FileKind> {
    if bytes.len() < 6 {
        return Err(Error::Format("file too short for a header".into()));
    }
    if &bytes[..5] != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    FileKind::from_byte(bytes[5])
}

struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    fn new(kind: FileKind, n: u32) -> Writer {
        let mut buf = Vec::new();
        buf.extend_from_slice(MAGIC);
        buf.push(kind as u8);
        buf.push(VERSION);
        buf.extend_from_slice(&n.to_be_bytes());
        Writer { buf }
    }

    fn put_bytes(&mut self, payload: &[u8]) {
        self.buf.extend_from_slice(&(payload.len() as u32).to_be_bytes());
        self.buf.extend_from_slice(payload);
    }

    fn put_uint(&mut self, value: &BigUint) {
        let payload = if value.is_zero() { Vec::new() } else { value.to_bytes_be() };
        self.put_bytes(&payload);
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(bytes: &'a [u8], expect: FileKind) -> Result<(Reader<'a>, u32)> {
        let kind = peek_kind(bytes)?;
        if kind != expect {
            return Err(Error::Format(format!(
                "expected kind 0x{:02x}, found 0x{:02x}",
                expect as u8, kind as u8
            )));
        }
        if bytes[6] != VERSION {
            return Err(Error::Format(format!("unsupported version 0x{:02x}", bytes[6])));
        }
        if bytes.len() < 11 {
            return Err(Error::Format("file too short for a header".into()));
        }
        let n = u32::from_be_bytes(bytes[7..11].try_into().unwrap());
        Ok((Reader { buf: bytes, pos: 11 }, n))
    }

    fn take(&mut self, len: usize) -> Result<&'a [u8]> {
        if self.pos + len > self.buf.len() {
            return Err(Error::Format("truncated file".into()));
        }
        let slice = &self.buf[self.pos..self.pos + len];
        self.pos += len;
        Ok(slice)
    }

    fn take_bytes(&mut self) -> Result<&'a [u8]> {
        let len_bytes = self.take(4)?;
        let len = u32::from_be_bytes(len_bytes.try_into().unwrap()) as usize;
        self.take(len)
    }

    fn take_uint(&mut self) -> Result<BigUint> {
        let payload = self.take_bytes()?;
        if payload.is_empty() {
            return Ok(BigUint::zero());
        }
        if payload[0] == 0 {
            return Err(Error::Format("non-minimal integer encoding".into()));
        }
        Ok(BigUint::from_bytes_be(payload))
    }

    fn finish(self) -> Result<()> {
        if self.pos != self.buf.len() {
            return Err(Error::Format(format!(
                "{} trailing bytes after the last field",
                self.buf.len() - self.pos
            )));
        }
        Ok(())
    }
}

pub fn encode_params(params: &PublicParams) -> Vec<u8> {
    let mut w = Writer::new(FileKind::Params, params.n);
    for v in [&params.p, &params.g1, &params.g2, &params.g3, &params.g4] {
        w.put_uint(v);
    }
    w.buf
}

pub fn decode_params(bytes: &[u8]) -> Result<PublicParams> {
    let (mut r, n) = Reader::new(bytes, FileKind::Params)?;
    let p = r.take_uint()?;
    let g1 = r.take_uint()?;
    let g2 = r.take_uint()?;
    let g3 = r.take_uint()?;
    let g4 = r.take_uint()?;
    r.finish()?;
    Ok(PublicParams { n, p, g1, g2, g3, g4 })
}

pub fn encode_sender_key(n: u32, key: &SenderKeyPair) -> Vec<u8> {
    let mut w = Writer::new(FileKind::SenderKey, n);
    for v in [&key.d, &key.k1, &key.k2, &key.alpha1, &key.alpha2, &key.e_pub] {
        w.put_uint(v);
    }
    w.buf
}

pub fn decode_sender_key(bytes: &[u8]) -> Result<(u32, SenderKeyPair)> {
    let (mut r, n) = Reader::new(bytes, FileKind::SenderKey)?;
    let key = SenderKeyPair {
        d: r.take_uint()?,
        k1: r.take_uint()?,
        k2: r.take_uint()?,
        alpha1: r.take_uint()?,
        alpha2: r.take_uint()?,
        e_pub: r.take_uint()?,
    };
    r.finish()?;
    Ok((n, key))
}

pub fn encode_recipient_key(n: u32, key: &RecipientKeyPair) -> Vec<u8> {
    let mut w = Writer::new(FileKind::RecipientKey, n);
    for v in [&key.d, &key.k1, &key.k2, &key.beta1, &key.beta2, &key.e_pub] {
        w.put_uint(v);
    }
    w.buf
}

pub fn decode_recipient_key(bytes: &[u8]) -> Result<(u32, RecipientKeyPair)> {
    let (mut r, n) = Reader::new(bytes, FileKind::RecipientKey)?;
    let key = RecipientKeyPair {
        d: r.take_uint()?,
        k1: r.take_uint()?,
        k2: r.take_uint()?,
        beta1: r.take_uint()?,
        beta2: r.take_uint()?,
        e_pub: r.take_uint()?,
    };
    r.finish()?;
    Ok((n, key))
}

pub fn encode_ciphertext(n: u32, bundle: &CiphertextBundle) -> Vec<u8> {
    let mut w = Writer::new(FileKind::Ciphertext, n);
    w.put_uint(&bundle.c1);
    w.put_bytes(&bundle.c2);
    w.put_uint(&bundle.e_a);
    w.buf
}

pub fn decode_ciphertext(bytes: &[u8]) -> Result<(u32, CiphertextBundle)> {
    let (mut r, n) = Reader::new(bytes, FileKind::Ciphertext)?;
    let c1 = r.take_uint()?;
    let c2 = r.take_bytes()?.to_vec();
    let e_a = r.take_uint()?;
    r.finish()?;
    Ok((n, CiphertextBundle { c1, c2, e_a }))
}
