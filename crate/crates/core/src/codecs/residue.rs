//! Residue coding: beyond a floor N, keep exactly the numbers whose residue
//! mod 2^m spells the first m bits of the key. Any single element ≥ N both
//! witnesses a number past the floor and reveals those m bits.

use crate::bits::Bitstring;
use crate::density::Rational;
use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;

/// The unique m with 2^{−m−1} < δ ≤ 2^{−m}, for δ ∈ (0, 1].
pub fn residue_modulus_exponent(delta: Rational) -> Result<u32> {
    let (num, den) = (*delta.numer(), *delta.denom());
    if num <= 0 || num > den {
        return Err(Error::Parameter(format!(
            "density must lie in (0, 1], got {delta}"
        )));
    }
    let (num, den) = (num as u128, den as u128);
    for m in 0..62u32 {
        if num << m <= den && (num << (m + 1)) > den {
            return Ok(m);
        }
    }
    Err(Error::Parameter("density too small to represent".into()))
}

/// The key padded out to exactly `m` bits: a short key gains a 1 followed by
/// zeros, a long key is truncated to its first m bits.
pub fn padded_prefix(rho: &Bitstring, m: u32) -> Bitstring {
    if rho.len() >= m as u64 {
        return rho.prefix(m as u64);
    }
    let mut out = rho.clone();
    out.push(1);
    while out.len() < m as u64 {
        out.push(0);
    }
    out
}

/// Encodes {n ∈ [start, horizon) : n ≡ key (mod 2^m)} where m is derived from
/// the requested density and the key is the padded first m bits, read most
/// significant bit first.
pub fn residue_encode(
    rho: &Bitstring,
    start: u64,
    delta: Rational,
    horizon: u64,
) -> Result<FinitePrefixSet> {
    let m = residue_modulus_exponent(delta)?;
    let modulus = 1u64 << m;
    let residue = padded_prefix(rho, m).value_be()?;
    let mut a = FinitePrefixSet::empty(horizon);
    if start >= horizon {
        return Ok(a);
    }
    let mut n = start + (residue + modulus - start % modulus) % modulus;
    while n < horizon {
        a.insert(n);
        n += modulus;
    }
    Ok(a)
}

/// Extracts from a single element n ≥ start both the witness n and the first
/// m key bits, as the m-bit big-endian representation of n mod 2^m.
pub fn residue_decode(n: u64, start: u64, m: u32) -> Result<(Bitstring, u64)> {
    if n < start {
        return Err(Error::InvalidSample(format!(
            "element {n} lies below the floor {start}"
        )));
    }
    if m >= 62 {
        return Err(Error::Parameter(format!("modulus exponent {m} too large")));
    }
    Ok((Bitstring::from_value_be(n % (1u64 << m), m), n))
}
