//! Parity coding for dense subsamples: interval i carries message bit j_i in
//! the parity of its elements, where the pair enumeration spreads every
//! message index across infinitely many intervals at ever-smaller densities.
//! Boundaries are even, so each pair {2m, 2m+1} lies inside one interval and
//! contributes exactly one element.

use crate::bits::Bitstring;
use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;
use crate::thresholds::{PairEnumeration, Scheme, ThresholdSequence};

/// Greedy boundary generation: n_0 = 0 and n_{i+1} is the smallest even
/// integer exceeding both n_i and n_i/δ_i. Generation stops at the first
/// boundary at or beyond the horizon, or after `count` intervals.
pub fn parity_thresholds(
    pairs: &PairEnumeration,
    count: usize,
    horizon: u64,
) -> Result<ThresholdSequence> {
    let mut values = vec![0u64];
    let mut i = 0usize;
    while i < count && *values.last().unwrap() < horizon {
        let last = *values.last().unwrap() as u128;
        let (_, t) = pairs.decode(i as u64);
        let next = (last.max(last << (t + 1)) + 2) & !1u128;
        let next = u64::try_from(next).map_err(|_| {
            Error::Parameter("parity boundary exceeds the representable range".into())
        })?;
        values.push(next);
        i += 1;
    }
    ThresholdSequence::new(Scheme::Parity, values)
}

/// Encodes up to `count` intervals over `[0, horizon)`. Interval i holds the
/// numbers of parity X(j_i); the final interval is clipped at the horizon.
pub fn parity_encode(
    x: &Bitstring,
    pairs: &PairEnumeration,
    count: usize,
    horizon: u64,
) -> Result<(FinitePrefixSet, ThresholdSequence)> {
    if count == 0 {
        return Err(Error::Parameter("interval count must be at least 1".into()));
    }
    let t = parity_thresholds(pairs, count, horizon)?;
    let mut a = FinitePrefixSet::empty(horizon);
    for i in 0..t.interval_count() {
        let (lo, hi) = t.interval(i).unwrap();
        let (j, _) = pairs.decode(i as u64);
        let bit = x.message_bit(j)? as u64;
        let mut m = lo + (bit + 2 - lo % 2) % 2;
        while m < hi.min(horizon) {
            a.insert(m);
            m += 2;
        }
    }
    Ok((a, t))
}

/// Recovers message bit `j` from any sample of an encoded set: find any
/// interval coded for j that the sample meets and read the parity of its
/// elements. All qualifying elements must agree.
pub fn parity_decode(
    sample: &FinitePrefixSet,
    j: u64,
    pairs: &PairEnumeration,
    t: &ThresholdSequence,
) -> Result<u8> {
    t.validate_parity(pairs)?;
    let mut decoded: Option<(u64, u8)> = None;
    for i in 0..t.interval_count() {
        let (lo, hi) = t.interval(i).unwrap();
        if lo >= sample.horizon() {
            break;
        }
        let (ji, _) = pairs.decode(i as u64);
        if ji != j {
            continue;
        }
        let hi = hi.min(sample.horizon());
        let mut m = sample.next_member(lo);
        while let Some(elem) = m.filter(|e| *e < hi) {
            let bit = (elem % 2) as u8;
            match decoded {
                None => decoded = Some((elem, bit)),
                Some((prev_elem, prev)) if prev != bit => {
                    return Err(Error::InvalidSample(format!(
                        "elements {prev_elem} and {elem} decode different parities for bit {j}"
                    )));
                }
                _ => {}
            }
            m = sample.next_member(elem + 1);
        }
    }
    decoded.map(|(_, bit)| bit).ok_or_else(|| {
        Error::InsufficientSample(format!("sample meets no interval coded for bit {j}"))
    })
}
