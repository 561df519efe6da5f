//! Deterministic subsamplers used by roundtrip checks and the CLI. All
//! randomness flows from an explicit 64-bit seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::density::Rational;
use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;

/// Keeps every `stride`-th member, starting from the member at rank `phase`.
pub fn stride_sample(a: &FinitePrefixSet, stride: u64, phase: u64) -> FinitePrefixSet {
    assert!(stride > 0, "stride must be positive");
    let mut out = FinitePrefixSet::empty(a.horizon());
    for (rank, m) in a.iter().enumerate() {
        if rank as u64 % stride == phase % stride {
            out.insert(m);
        }
    }
    out
}

/// A seeded uniformly random subset of [0, universe) with exactly `size`
/// members.
pub fn seeded_subset(universe: u64, size: usize, seed: u64) -> Result<FinitePrefixSet> {
    if size as u64 > universe {
        return Err(Error::Parameter(format!(
            "cannot pick {size} members from a window of {universe}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx: Vec<u64> = (0..universe).collect();
    for i in 0..size {
        let j = rng.random_range(i as u64..universe) as usize;
        idx.swap(i, j);
    }
    FinitePrefixSet::from_members(universe, idx[..size].iter().copied())
}

/// Keeps each member independently with probability `keep`, reproducibly for
/// a given seed.
pub fn bernoulli_sample(a: &FinitePrefixSet, keep: Rational, seed: u64) -> Result<FinitePrefixSet> {
    let (num, den) = (*keep.numer(), *keep.denom());
    if num < 0 || num > den {
        return Err(Error::Parameter(format!(
            "keep probability must lie in [0, 1], got {keep}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = FinitePrefixSet::empty(a.horizon());
    for m in a.iter() {
        if rng.random_range(0..den as u64) < num as u64 {
            out.insert(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stride_phases_partition_the_set() {
        let a = FinitePrefixSet::from_fn(100, |n| n % 3 == 1);
        let total: u64 = (0..4).map(|p| stride_sample(&a, 4, p).count()).sum();
        assert_eq!(total, a.count());
        let s = stride_sample(&a, 2, 0);
        assert!(s.is_subset_of(&a));
        assert_eq!(s.iter().next(), a.iter().next());
    }

    #[test]
    fn seeded_subset_has_exact_size() {
        for seed in 0..20u64 {
            let s = seeded_subset(64, 16, seed).unwrap();
            assert_eq!(s.count(), 16);
            assert_eq!(s, seeded_subset(64, 16, seed).unwrap());
        }
        assert!(seeded_subset(4, 5, 0).is_err());
    }

    #[test]
    fn bernoulli_is_seed_deterministic() {
        let a = FinitePrefixSet::full(500);
        let s1 = bernoulli_sample(&a, Rational::new(1, 4), 7).unwrap();
        let s2 = bernoulli_sample(&a, Rational::new(1, 4), 7).unwrap();
        let s3 = bernoulli_sample(&a, Rational::new(1, 4), 8).unwrap();
        assert_eq!(s1, s2);
        assert_ne!(s1, s3);
        assert!(s1.is_subset_of(&a));
        assert!(bernoulli_sample(&a, Rational::new(3, 2), 0).is_err());
    }
}
