use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite binary string. The empty string is a valid value.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bitstring {
    bits: Vec<u8>,
}

impl Bitstring {
    pub fn new() -> Self {
        Bitstring { bits: Vec::new() }
    }

    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Result<Self> {
        let bits: Vec<u8> = bits.into_iter().collect();
        if bits.iter().any(|b| *b > 1) {
            return Err(Error::Format("bitstring values must be 0 or 1".into()));
        }
        Ok(Bitstring { bits })
    }

    /// The `width` low bits of `value`, most significant first.
    pub fn from_value_be(value: u64, width: u32) -> Self {
        let bits = (0..width)
            .rev()
            .map(|i| ((value >> i) & 1) as u8)
            .collect();
        Bitstring { bits }
    }

    pub fn len(&self) -> u64 {
        self.bits.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: u64) -> Option<u8> {
        self.bits.get(i as usize).copied()
    }

    /// Bit `i` treated as a message source: out-of-range reads are reported
    /// as an exhausted source rather than silently padded.
    pub fn message_bit(&self, i: u64) -> Result<u8> {
        self.bit(i).ok_or(Error::SourceExhausted {
            index: i,
            len: self.len(),
        })
    }

    pub fn push(&mut self, b: u8) {
        debug_assert!(b <= 1);
        self.bits.push(b);
    }

    pub fn prefix(&self, len: u64) -> Bitstring {
        Bitstring {
            bits: self.bits[..len as usize].to_vec(),
        }
    }

    pub fn is_prefix_of(&self, other: &Bitstring) -> bool {
        self.len() <= other.len() && other.bits[..self.bits.len()] == self.bits[..]
    }

    /// Value of the string read most-significant-bit first. Requires length ≤ 63.
    pub fn value_be(&self) -> Result<u64> {
        if self.len() > 63 {
            return Err(Error::Parameter(format!(
                "bitstring of length {} does not fit a 64-bit value",
                self.len()
            )));
        }
        Ok(self.bits.iter().fold(0u64, |v, b| (v << 1) | *b as u64))
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.bits.iter().copied()
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::Format(format!(
                        "bitstring may only contain 0 and 1, found {c:?}"
                    )))
                }
            }
        }
        Ok(Bitstring { bits })
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// The canonical bijection between naturals and binary strings, ordered by
/// increasing length and lexicographically within a length:
/// 0 ↦ ε, 1 ↦ "0", 2 ↦ "1", 3 ↦ "00", …
///
/// Concretely, `n` maps to the binary expansion of `n + 1` with the leading 1
/// removed, and a string `s` maps back to `value(1⌢s) − 1`.
pub fn string_of_index(n: u64) -> Bitstring {
    let v = n + 1;
    let len = 63 - v.leading_zeros(); // bits below the leading 1
    Bitstring::from_value_be(v & !(1 << len), len)
}

/// Inverse of [`string_of_index`]. Requires length ≤ 63.
pub fn index_of_string(s: &Bitstring) -> Result<u64> {
    if s.len() > 63 {
        return Err(Error::Parameter(format!(
            "string of length {} has no 64-bit index",
            s.len()
        )));
    }
    let v = s.iter().fold(1u64, |v, b| (v << 1) | b as u64);
    Ok(v - 1)
}

/// Length of `string_of_index(n)` without materializing it.
pub fn string_length_of_index(n: u64) -> u64 {
    (63 - (n + 1).leading_zeros()) as u64
}

/// Bit `i` of `string_of_index(n)`, for `i < string_length_of_index(n)`.
pub fn string_bit_of_index(n: u64, i: u64) -> u8 {
    let len = string_length_of_index(n);
    debug_assert!(i < len);
    ((n + 1) >> (len - 1 - i) & 1) as u8
}
