//! Initial-segment coding: the encoded set collects the indices of every
//! finite initial segment of the message under the length-then-lex bijection,
//! so any single surviving element pins down a whole prefix.

use crate::bits::{index_of_string, string_bit_of_index, string_length_of_index, Bitstring};
use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;

/// Encodes the message over `[0, horizon)`: index n is a member iff the
/// string with index n is an initial segment of `x`.
pub fn dm_encode(x: &Bitstring, horizon: u64) -> Result<FinitePrefixSet> {
    if horizon == 0 {
        return Ok(FinitePrefixSet::empty(0));
    }
    // Longest prefix whose index still lands inside the window.
    let mut needed = 0u64;
    while needed < 63 && (1u64 << (needed + 1)) - 1 < horizon {
        needed += 1;
    }
    if x.len() < needed {
        return Err(Error::SourceExhausted {
            index: needed - 1,
            len: x.len(),
        });
    }
    let mut a = FinitePrefixSet::empty(horizon);
    for len in 0..=needed {
        let idx = index_of_string(&x.prefix(len))?;
        if idx < horizon {
            a.insert(idx);
        }
    }
    Ok(a)
}

/// Recovers message bit `i` from any sample of an encoded set. Every element
/// whose string is longer than `i` carries the bit; all of them must agree.
pub fn dm_decode(sample: &FinitePrefixSet, i: u64) -> Result<u8> {
    let mut decoded: Option<(u64, u8)> = None;
    for n in sample.iter() {
        if string_length_of_index(n) <= i {
            continue;
        }
        let bit = string_bit_of_index(n, i);
        match decoded {
            None => decoded = Some((n, bit)),
            Some((m, prev)) if prev != bit => {
                return Err(Error::InvalidSample(format!(
                    "elements {m} and {n} decode different values for bit {i}"
                )));
            }
            _ => {}
        }
    }
    decoded
        .map(|(_, bit)| bit)
        .ok_or_else(|| Error::InsufficientSample(format!("no element names a string longer than {i}")))
}
