//! Threshold sequences for the interval, slow-decay and parity codecs, plus
//! the pair enumeration driving the parity scheme.

use serde::{Deserialize, Serialize};

use crate::density::{isqrt, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Interval,
    SlowDecay,
    Parity,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Interval => "interval",
            Scheme::SlowDecay => "slowdecay",
            Scheme::Parity => "parity",
        }
    }
}

/// A strictly increasing boundary sequence together with the codec scheme
/// whose growth constraints it must satisfy.
///
/// Indexing conventions per scheme:
/// - `interval`: `values[i]` is n_i, constrained by n_{i+1} > i·n_i;
/// - `slowdecay`: `values[i]` is n_{i+1} (the sequence starts at n_1), with
///   n_i > 2^{2i−1} — this bound is used by the density argument but is not
///   among the two stated construction constraints, so it is enforced here
///   explicitly — and block-length divisibility 2^{2i+1} | n_{i+1} − n_i;
///   the decay constraint on f is checked separately since it needs f;
/// - `parity`: `values[i]` is n_i with n_0 = 0, every boundary even, and
///   δ_i·n_{i+1} > n_i for π(i) = (j_i, δ_i), checked against a supplied
///   pair enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdSequence {
    pub scheme: Scheme,
    pub values: Vec<u64>,
}

impl ThresholdSequence {
    pub fn new(scheme: Scheme, values: Vec<u64>) -> Result<Self> {
        let t = ThresholdSequence { scheme, values };
        t.validate_structure()?;
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Re-checks every constraint that does not need external context
    /// (a density function or pair enumeration).
    pub fn validate_structure(&self) -> Result<()> {
        for w in self.values.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidThresholds(format!(
                    "boundaries must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        match self.scheme {
            Scheme::Interval => {
                for (i, w) in self.values.windows(2).enumerate() {
                    if (w[1] as u128) <= (i as u128) * (w[0] as u128) {
                        return Err(Error::InvalidThresholds(format!(
                            "interval growth violated at index {i}: {} ≤ {i}·{}",
                            w[1], w[0]
                        )));
                    }
                }
            }
            Scheme::SlowDecay => {
                for (idx, v) in self.values.iter().enumerate() {
                    // values[idx] is n_{idx+1}; bound n_i > 2^{2i−1}.
                    let bound = 1u128 << (2 * idx + 1);
                    if (*v as u128) <= bound {
                        return Err(Error::InvalidThresholds(format!(
                            "slow-decay bound violated: boundary {} must exceed {}",
                            v, bound
                        )));
                    }
                }
                for (idx, w) in self.values.windows(2).enumerate() {
                    let modulus = 1u64 << (2 * idx + 3);
                    if (w[1] - w[0]) % modulus != 0 {
                        return Err(Error::InvalidThresholds(format!(
                            "slow-decay block length {} not divisible by {}",
                            w[1] - w[0],
                            modulus
                        )));
                    }
                }
            }
            Scheme::Parity => {
                if self.values.first().is_some_and(|v| *v != 0) {
                    return Err(Error::InvalidThresholds(
                        "parity sequence must start at 0".into(),
                    ));
                }
                if let Some(v) = self.values.iter().find(|v| *v % 2 != 0) {
                    return Err(Error::InvalidThresholds(format!(
                        "parity boundary {v} is odd"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Slow-decay decay constraint: f(m) ≤ 1/(5·2^{2i+1}) for all m ≥ n_i.
    /// `f` must be monotone non-increasing so checking at n_i suffices.
    pub fn validate_slowdecay_decay<F: FnMut(u64) -> Rational>(&self, mut f: F) -> Result<()> {
        if self.scheme != Scheme::SlowDecay {
            return Err(Error::InvalidThresholds(format!(
                "expected slowdecay scheme, got {}",
                self.scheme.name()
            )));
        }
        for (idx, v) in self.values.iter().enumerate() {
            let i = idx as u32 + 1;
            if !rational_at_most_inverse(f(*v), 5u128 << (2 * i + 1)) {
                return Err(Error::InvalidThresholds(format!(
                    "density bound not yet reached at boundary {v}: f({v}) > 1/{}",
                    5u128 << (2 * i + 1)
                )));
            }
        }
        Ok(())
    }

    /// Parity growth constraint against a pair enumeration:
    /// δ_i·n_{i+1} > n_i where π(i) = (j_i, δ_i).
    pub fn validate_parity(&self, pairs: &PairEnumeration) -> Result<()> {
        if self.scheme != Scheme::Parity {
            return Err(Error::InvalidThresholds(format!(
                "expected parity scheme, got {}",
                self.scheme.name()
            )));
        }
        self.validate_structure()?;
        for (i, w) in self.values.windows(2).enumerate() {
            let (_, t) = pairs.decode(i as u64);
            // n_{i+1} > n_i / δ = n_i · 2^{t+1}
            if (w[1] as u128) <= (w[0] as u128) << (t + 1) {
                return Err(Error::InvalidThresholds(format!(
                    "parity growth violated at interval {i}: {} ≤ {}·2^{}",
                    w[1],
                    w[0],
                    t + 1
                )));
            }
        }
        Ok(())
    }

    /// Interval boundaries for the coded window: the pairs (n_i, n_{i+1}).
    pub fn interval(&self, i: usize) -> Option<(u64, u64)> {
        if i + 1 < self.values.len() {
            Some((self.values[i], self.values[i + 1]))
        } else {
            None
        }
    }

    pub fn interval_count(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

/// Default interval-scheme generator: n_0 = 1, n_{i+1} = max(i, 1)·n_i + 1,
/// the minimal growth satisfying n_{i+1} > i·n_i while staying strictly
/// increasing at i ∈ {0, 1}. Boundaries are generated until the window
/// [0, horizon) is covered. Extending the horizon only appends boundaries.
pub fn default_interval_thresholds(horizon: u64) -> ThresholdSequence {
    let mut values = vec![1u64];
    let mut i = 0u64;
    while *values.last().unwrap() < horizon {
        let last = *values.last().unwrap();
        values.push(i.max(1).saturating_mul(last).saturating_add(1));
        i += 1;
    }
    if values.len() < 2 {
        values.push(2);
    }
    ThresholdSequence {
        scheme: Scheme::Interval,
        values,
    }
}

/// The computable bijection i ↦ (j, δ) used by the parity codec, restricted
/// to dyadic densities δ = 1/2^{t+1} and realized as the Cantor pairing of
/// (j, t). Every (j, t) pair is hit exactly once and the inverse is exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairEnumeration;

impl PairEnumeration {
    pub fn canonical() -> Self {
        PairEnumeration
    }

    /// i ↦ (j, t), the pre-image under the Cantor pairing.
    pub fn decode(&self, i: u64) -> (u64, u32) {
        let w = triangular_root(i);
        let r = i - w * (w + 1) / 2;
        (w - r, r as u32)
    }

    /// i ↦ (j, δ) with δ = 1/2^{t+1}.
    pub fn message_index_and_density(&self, i: u64) -> (u64, Rational) {
        let (j, t) = self.decode(i);
        assert!(t < 62, "dyadic exponent out of range");
        (j, Rational::new(1, 1i64 << (t + 1)))
    }

    /// (j, t) ↦ i, the Cantor pairing.
    pub fn encode(&self, j: u64, t: u32) -> u64 {
        let w = j + t as u64;
        w * (w + 1) / 2 + t as u64
    }
}

/// Largest w with w(w+1)/2 ≤ i.
fn triangular_root(i: u64) -> u64 {
    let mut w = (isqrt(8 * i + 1) - 1) / 2;
    while (w + 1) * (w + 2) / 2 <= i {
        w += 1;
    }
    while w * (w + 1) / 2 > i {
        w -= 1;
    }
    w
}

/// True iff q ≤ 1/d, i.e. q·d ≤ 1.
fn rational_at_most_inverse(q: Rational, d: u128) -> bool {
    let n = *q.numer();
    if n <= 0 {
        return true;
    }
    (n as u128) * d <= *q.denom() as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_interval_matches_stated_prefix() {
        let t = default_interval_thresholds(100_000);
        assert_eq!(&t.values[..7], &[1, 2, 3, 7, 22, 89, 446]);
        assert!(t.validate_structure().is_ok());
        assert!(*t.values.last().unwrap() >= 100_000);
    }

    #[test]
    fn default_interval_extension_is_prefix_stable() {
        let short = default_interval_thresholds(100);
        let long = default_interval_thresholds(100_000);
        assert_eq!(&long.values[..short.values.len()], &short.values[..]);
    }

    #[test]
    fn interval_growth_rejected() {
        // n_3 = 6 ≤ 2·n_2 = 6 violates n_{i+1} > i·n_i.
        let t = ThresholdSequence {
            scheme: Scheme::Interval,
            values: vec![1, 2, 3, 6],
        };
        assert!(t.validate_structure().is_err());
        assert!(ThresholdSequence::new(Scheme::Interval, vec![1, 2, 3, 7]).is_ok());
    }

    #[test]
    fn slowdecay_structure_constraints() {
        // n_1 must exceed 2, n_2 must exceed 8, and n_2 − n_1 ≡ 0 mod 8.
        assert!(ThresholdSequence::new(Scheme::SlowDecay, vec![2]).is_err());
        assert!(ThresholdSequence::new(Scheme::SlowDecay, vec![3, 8]).is_err());
        assert!(ThresholdSequence::new(Scheme::SlowDecay, vec![3, 12]).is_err());
        assert!(ThresholdSequence::new(Scheme::SlowDecay, vec![3, 11]).is_ok());
    }

    #[test]
    fn parity_structure_constraints() {
        assert!(ThresholdSequence::new(Scheme::Parity, vec![2, 4]).is_err());
        assert!(ThresholdSequence::new(Scheme::Parity, vec![0, 3]).is_err());
        let t = ThresholdSequence::new(Scheme::Parity, vec![0, 2, 6]).unwrap();
        assert!(t.validate_parity(&PairEnumeration::canonical()).is_ok());
        // Interval 1 has δ = 1/2, so n_2 must exceed 2·n_1 = 4.
        let bad = ThresholdSequence::new(Scheme::Parity, vec![0, 2, 4]).unwrap();
        assert!(bad.validate_parity(&PairEnumeration::canonical()).is_err());
    }

    #[test]
    fn pair_enumeration_is_a_bijection() {
        let pe = PairEnumeration::canonical();
        assert_eq!(pe.decode(0), (0, 0));
        let (j0, d0) = pe.message_index_and_density(0);
        assert_eq!((j0, d0), (0, Rational::new(1, 2)));

        let mut seen = std::collections::HashSet::new();
        for i in 0..5000u64 {
            let (j, t) = pe.decode(i);
            assert!(seen.insert((j, t)), "pair ({j},{t}) repeated");
            assert_eq!(pe.encode(j, t), i);
        }
        // Every small pair is hit.
        for j in 0..40 {
            for t in 0..40u32 {
                let i = pe.encode(j, t);
                assert_eq!(pe.decode(i), (j, t));
            }
        }
    }
}
