//! Interval-redundancy coding: each member i of the source set contributes
//! the whole block [n_i, n_{i+1}), so the result is periodically very dense
//! and any element of a block betrays its index.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;
use crate::thresholds::{Scheme, ThresholdSequence};

/// Encodes a source-set membership predicate over `[0, horizon)` as the union
/// of the blocks picked out by it.
pub fn interval_encode<F: FnMut(u64) -> bool>(
    mut source: F,
    t: &ThresholdSequence,
    horizon: u64,
) -> Result<FinitePrefixSet> {
    require_interval_scheme(t)?;
    let mut a = FinitePrefixSet::empty(horizon);
    for i in 0..t.interval_count() {
        let (lo, hi) = t.interval(i).unwrap();
        if lo >= horizon {
            break;
        }
        if source(i as u64) {
            for m in lo..hi.min(horizon) {
                a.insert(m);
            }
        }
    }
    Ok(a)
}

/// Recovers the source indices whose block the sample touches. For a sample
/// of an encoded set this is a subset of the source, and it is everything the
/// window and the thinning allow.
pub fn interval_decode(
    sample: &FinitePrefixSet,
    t: &ThresholdSequence,
) -> Result<BTreeSet<u64>> {
    require_interval_scheme(t)?;
    let mut out = BTreeSet::new();
    for i in 0..t.interval_count() {
        let (lo, hi) = t.interval(i).unwrap();
        if lo >= sample.horizon() {
            break;
        }
        if sample.count_in(lo, hi.min(sample.horizon())) > 0 {
            out.insert(i as u64);
        }
    }
    Ok(out)
}

fn require_interval_scheme(t: &ThresholdSequence) -> Result<()> {
    if t.scheme != Scheme::Interval {
        return Err(Error::InvalidThresholds(format!(
            "expected interval scheme, got {}",
            t.scheme.name()
        )));
    }
    t.validate_structure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{density_at, Rational};

    fn stated_thresholds() -> ThresholdSequence {
        ThresholdSequence::new(Scheme::Interval, vec![1, 2, 3, 7, 22]).unwrap()
    }

    #[test]
    fn encode_pins_stated_window() {
        let t = stated_thresholds();
        let a = interval_encode(|i| i == 0 || i == 2, &t, 7).unwrap();
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![1, 3, 4, 5, 6]);
    }

    #[test]
    fn empty_source_gives_empty_set() {
        let t = stated_thresholds();
        let a = interval_encode(|_| false, &t, 7).unwrap();
        assert!(a.is_empty());
    }

    #[test]
    fn block_density_at_the_stated_point() {
        let t = stated_thresholds();
        let a = interval_encode(|i| i == 0 || i == 2, &t, 7).unwrap();
        // |A ∩ [0,6]| = 5 ≥ (1/2)·7 for the i = 2 block ending at n_3 = 7.
        assert_eq!(a.count_through(6), 5);
        assert!(density_at(&a, 6).unwrap() >= Rational::new(1, 2));
    }

    #[test]
    fn decode_pins_stated_values() {
        let t = stated_thresholds();
        let one = FinitePrefixSet::from_members(7, [4]).unwrap();
        assert_eq!(interval_decode(&one, &t).unwrap().into_iter().collect::<Vec<_>>(), vec![2]);

        let none = FinitePrefixSet::empty(7);
        assert!(interval_decode(&none, &t).unwrap().is_empty());

        let two = FinitePrefixSet::from_members(7, [1, 5]).unwrap();
        assert_eq!(
            interval_decode(&two, &t).unwrap().into_iter().collect::<Vec<_>>(),
            vec![0, 2]
        );
    }

    #[test]
    fn violating_thresholds_are_rejected() {
        let bad = ThresholdSequence {
            scheme: Scheme::Interval,
            values: vec![1, 2, 3, 6],
        };
        assert!(interval_encode(|_| true, &bad, 10).is_err());
        let sample = FinitePrefixSet::empty(10);
        assert!(interval_decode(&sample, &bad).is_err());
    }
}
