//! Slow-decay coding: the window splits into blocks whose elements all end,
//! in binary, with the self-delimiting suffix (prefix of the message)⌢1⌢0^b.
//! Longer blocks carry longer prefixes, slowly enough that the set stays
//! f-dense for the given decay function.
//!
//! A `count`-block encoding consists of the initial block [0, n_1), which is
//! kept whole, and coded blocks [n_b, n_{b+1}) for b = 1..count−1 with the
//! final coded block running to the horizon. The returned thresholds are
//! n_1 … n_{count−1}.

use crate::bits::Bitstring;
use crate::density::Rational;
use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;
use crate::thresholds::{Scheme, ThresholdSequence};

/// Value of the length-(2b+1) suffix carried by block b: the first b message
/// bits (leftmost = most significant), then a 1, then b zeros.
fn suffix_value(x: &Bitstring, b: u32) -> Result<u64> {
    let mut v = 1u64 << b;
    for t in 0..b as u64 {
        v |= (x.message_bit(t)? as u64) << (2 * b as u64 - t);
    }
    Ok(v)
}

/// Encodes `count` blocks over `[0, horizon)` for a monotone non-increasing
/// decay function `f` with exact rational values. Thresholds are found by
/// bounded search inside the window; a function that does not decay fast
/// enough within it is reported, not looped on.
pub fn slowdecay_encode<F: FnMut(u64) -> Rational>(
    x: &Bitstring,
    mut f: F,
    count: usize,
    horizon: u64,
) -> Result<(FinitePrefixSet, ThresholdSequence)> {
    if count == 0 {
        return Err(Error::Parameter("block count must be at least 1".into()));
    }
    if x.len() + 1 < count as u64 {
        return Err(Error::SourceExhausted {
            index: count as u64 - 2,
            len: x.len(),
        });
    }

    let mut thresholds: Vec<u64> = Vec::with_capacity(count - 1);
    for b in 1..count as u32 {
        let prev = thresholds.last().copied().unwrap_or(0);
        let floor = prev.max(1u64 << (2 * b - 1));
        let bound_denom = 5u128 << (2 * b + 1);
        // First point where f drops to 1/(5·2^{2b+1}); f is monotone so a
        // binary search over (floor, horizon) finds the least one.
        let mut lo = floor + 1;
        let mut hi = horizon;
        if lo >= hi || !meets_bound(f(hi - 1), bound_denom) {
            return Err(Error::ThresholdSearchExhausted {
                bound: horizon,
                reason: format!("f never reaches 1/{bound_denom} inside the window"),
            });
        }
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if meets_bound(f(mid), bound_denom) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let mut n = lo;
        if b >= 2 {
            // Align the block length to the previous block's period.
            let modulus = 1u64 << (2 * b - 1);
            let rem = (n - prev) % modulus;
            if rem != 0 {
                n += modulus - rem;
            }
            while n < horizon && !meets_bound(f(n), bound_denom) {
                n += modulus;
            }
        }
        if n >= horizon {
            return Err(Error::ThresholdSearchExhausted {
                bound: horizon,
                reason: format!("boundary for block {b} does not fit the window"),
            });
        }
        thresholds.push(n);
    }

    let t = ThresholdSequence::new(Scheme::SlowDecay, thresholds)?;
    t.validate_slowdecay_decay(&mut f)?;

    let mut a = FinitePrefixSet::empty(horizon);
    let n1 = t.values.first().copied().unwrap_or(horizon);
    for m in 0..n1.min(horizon) {
        a.insert(m);
    }
    for (idx, &lo) in t.values.iter().enumerate() {
        let b = idx as u32 + 1;
        let hi = t.values.get(idx + 1).copied().unwrap_or(horizon);
        let modulus = 1u64 << (2 * b + 1);
        let residue = suffix_value(x, b)?;
        let mut m = lo + (residue + modulus - lo % modulus) % modulus;
        while m < hi.min(horizon) {
            a.insert(m);
            m += modulus;
        }
    }
    Ok((a, t))
}

/// True iff q ≤ 1/denom.
fn meets_bound(q: Rational, denom: u128) -> bool {
    let n = *q.numer();
    n <= 0 || (n as u128) * denom <= *q.denom() as u128
}

/// Recovers message bit `i` from any sample element at or beyond the first
/// threshold: an element with k > i trailing zeros ends with a length-(2k+1)
/// suffix whose top k bits, read downward from position 2k, are the first k
/// message bits.
pub fn slowdecay_decode(sample: &FinitePrefixSet, n1: u64, i: u64) -> Result<u8> {
    let mut decoded: Option<(u64, u8)> = None;
    let mut m = sample.next_member(n1);
    while let Some(elem) = m {
        let k = elem.trailing_zeros() as u64;
        if k > i {
            let pos = 2 * k - i;
            let bit = if pos >= 64 { 0 } else { ((elem >> pos) & 1) as u8 };
            match decoded {
                None => decoded = Some((elem, bit)),
                Some((prev_elem, prev)) if prev != bit => {
                    return Err(Error::InvalidSample(format!(
                        "elements {prev_elem} and {elem} decode different values for bit {i}"
                    )));
                }
                _ => {}
            }
        }
        m = sample.next_member(elem + 1);
    }
    decoded.map(|(_, bit)| bit).ok_or_else(|| {
        Error::InsufficientSample(format!(
            "no element at or beyond {n1} has more than {i} trailing zeros"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::is_f_dense;

    fn harmonic(n: u64) -> Rational {
        Rational::new(1, n as i64 + 1)
    }

    // Independent suffix oracle: render m in binary and test ends_with on the
    // literal suffix string.
    fn ends_with_suffix(m: u64, x: &str, b: usize) -> bool {
        let suffix: String = format!("{}1{}", &x[..b], "0".repeat(b));
        let bin = format!("{m:b}");
        bin.len() >= suffix.len() && bin.ends_with(&suffix)
    }

    #[test]
    fn encode_matches_binary_suffix_oracle() {
        let x: Bitstring = "11".parse().unwrap();
        let (a, t) = slowdecay_encode(&x, harmonic, 3, 1000).unwrap();
        // f(n) = 1/(n+1) reaches 1/40 at 39 and 1/160 at 159, already aligned.
        assert_eq!(t.values, vec![39, 159]);
        for m in 0..1000u64 {
            let expect = if m < 39 {
                true
            } else if m < 159 {
                ends_with_suffix(m, "11", 1)
            } else {
                ends_with_suffix(m, "11", 2)
            };
            assert_eq!(a.contains(m), expect, "membership of {m}");
        }
    }

    #[test]
    fn stated_residue_for_the_third_block() {
        let x: Bitstring = "11".parse().unwrap();
        let (a, t) = slowdecay_encode(&x, harmonic, 3, 1000).unwrap();
        let n2 = t.values[1];
        for m in n2..1000 {
            assert_eq!(a.contains(m), m % 32 == 28, "m = {m}");
        }
    }

    #[test]
    fn initial_block_is_kept_whole_and_f_density_holds() {
        let x: Bitstring = "10".parse().unwrap();
        let (a, t) = slowdecay_encode(&x, harmonic, 3, 2000).unwrap();
        for m in 0..t.values[0] {
            assert!(a.contains(m));
        }
        assert!(is_f_dense(&a, harmonic));
    }

    #[test]
    fn decode_pins_stated_values() {
        // Elements ≡ 28 (mod 32) carry "11": two trailing zeros, bits 4 and 3.
        let sample = FinitePrefixSet::from_members(200, [60, 92, 188]).unwrap();
        assert_eq!(slowdecay_decode(&sample, 39, 0).unwrap(), 1);
        assert_eq!(slowdecay_decode(&sample, 39, 1).unwrap(), 1);
        assert!(matches!(
            slowdecay_decode(&sample, 39, 2),
            Err(Error::InsufficientSample(_))
        ));
    }

    #[test]
    fn odd_elements_never_decode() {
        let sample = FinitePrefixSet::from_members(100, [41, 43, 99]).unwrap();
        assert!(matches!(
            slowdecay_decode(&sample, 39, 0),
            Err(Error::InsufficientSample(_))
        ));
    }

    #[test]
    fn elements_below_the_first_threshold_are_ignored() {
        // 8 has three trailing zeros but lies in the uncoded initial block.
        let sample = FinitePrefixSet::from_members(100, [8]).unwrap();
        assert!(slowdecay_decode(&sample, 39, 0).is_err());
        assert_eq!(slowdecay_decode(&sample, 8, 0).unwrap(), 0);
    }

    #[test]
    fn non_decaying_function_is_rejected() {
        let x: Bitstring = "1".parse().unwrap();
        let e = slowdecay_encode(&x, |_| Rational::new(1, 2), 2, 10_000).unwrap_err();
        assert!(matches!(e, Error::ThresholdSearchExhausted { .. }));
    }

    #[test]
    fn short_message_is_rejected() {
        let x: Bitstring = "1".parse().unwrap();
        assert!(matches!(
            slowdecay_encode(&x, harmonic, 4, 100_000),
            Err(Error::SourceExhausted { .. })
        ));
    }

    #[test]
    fn single_block_fills_the_window() {
        let x = Bitstring::new();
        let (a, t) = slowdecay_encode(&x, harmonic, 1, 50).unwrap();
        assert!(t.is_empty());
        assert_eq!(a.count(), 50);
    }
}
