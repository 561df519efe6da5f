use std::fmt;

use crate::error::{Error, Result};

/// Membership bitmap of a set of naturals over the window `[0, horizon)`.
///
/// Bit `n` records whether `n` is in the set. Bits at or beyond the horizon do
/// not exist; all operations that take a point `n` require `n < horizon` unless
/// stated otherwise. Storage is LSB-first 64-bit words, so the in-memory layout
/// matches the on-disk `SUBSET01` byte layout.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePrefixSet {
    horizon: u64,
    words: Vec<u64>,
}

impl FinitePrefixSet {
    pub fn empty(horizon: u64) -> Self {
        let words = vec![0u64; horizon.div_ceil(64) as usize];
        FinitePrefixSet { horizon, words }
    }

    pub fn full(horizon: u64) -> Self {
        let mut s = Self::empty(horizon);
        for n in 0..horizon {
            s.insert(n);
        }
        s
    }

    /// Builds a set from explicit members; any member outside the window is an error.
    pub fn from_members<I: IntoIterator<Item = u64>>(horizon: u64, members: I) -> Result<Self> {
        let mut s = Self::empty(horizon);
        for n in members {
            if n >= horizon {
                return Err(Error::OutOfWindow { n, horizon });
            }
            s.insert(n);
        }
        Ok(s)
    }

    /// Builds a set by evaluating a membership predicate at every window point.
    pub fn from_fn<F: FnMut(u64) -> bool>(horizon: u64, mut pred: F) -> Self {
        let mut s = Self::empty(horizon);
        for n in 0..horizon {
            if pred(n) {
                s.insert(n);
            }
        }
        s
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn contains(&self, n: u64) -> bool {
        if n >= self.horizon {
            return false;
        }
        self.words[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    /// Characteristic-function view: 1 if `n` is a member, else 0.
    pub fn bit(&self, n: u64) -> u8 {
        self.contains(n) as u8
    }

    pub fn insert(&mut self, n: u64) {
        assert!(n < self.horizon, "insert past horizon");
        self.words[(n / 64) as usize] |= 1 << (n % 64);
    }

    pub fn remove(&mut self, n: u64) {
        assert!(n < self.horizon, "remove past horizon");
        self.words[(n / 64) as usize] &= !(1 << (n % 64));
    }

    /// Total number of members.
    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// |A ∩ [0, n]| — the closed prefix count. Requires `n < horizon`.
    pub fn count_through(&self, n: u64) -> u64 {
        assert!(n < self.horizon, "count_through past horizon");
        let full_words = (n + 1) / 64;
        let mut c: u64 = 0;
        for w in &self.words[..full_words as usize] {
            c += w.count_ones() as u64;
        }
        let rem = (n + 1) % 64;
        if rem > 0 {
            let mask = (1u64 << rem) - 1;
            c += (self.words[full_words as usize] & mask).count_ones() as u64;
        }
        c
    }

    /// |A ∩ [lo, hi)| for `hi <= horizon`.
    pub fn count_in(&self, lo: u64, hi: u64) -> u64 {
        assert!(hi <= self.horizon && lo <= hi, "count_in out of range");
        if lo == hi {
            return 0;
        }
        let upto_hi = self.count_through(hi - 1);
        if lo == 0 {
            upto_hi
        } else {
            upto_hi - self.count_through(lo - 1)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn max_element(&self) -> Option<u64> {
        for (i, w) in self.words.iter().enumerate().rev() {
            if *w != 0 {
                return Some(i as u64 * 64 + 63 - w.leading_zeros() as u64);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as u64;
                    w &= w - 1;
                    Some(i as u64 * 64 + b)
                }
            })
        })
    }

    /// First member at or after `from`, if any.
    pub fn next_member(&self, from: u64) -> Option<u64> {
        if from >= self.horizon {
            return None;
        }
        let mut wi = (from / 64) as usize;
        let mut w = self.words[wi] & !((1u64 << (from % 64)) - 1);
        loop {
            if w != 0 {
                return Some(wi as u64 * 64 + w.trailing_zeros() as u64);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    pub fn is_subset_of(&self, other: &FinitePrefixSet) -> bool {
        if self.horizon > other.horizon {
            // Members beyond the other window would disqualify.
            if self.iter().any(|n| !other.contains(n)) {
                return false;
            }
            return true;
        }
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &FinitePrefixSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Pointwise intersection; both sets must share a horizon.
    pub fn intersect(&self, other: &FinitePrefixSet) -> Result<FinitePrefixSet> {
        if self.horizon != other.horizon {
            return Err(Error::Parameter(format!(
                "intersect requires a common window, got {} and {}",
                self.horizon, other.horizon
            )));
        }
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        Ok(FinitePrefixSet {
            horizon: self.horizon,
            words,
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_raw_words(horizon: u64, words: Vec<u64>) -> Self {
        FinitePrefixSet { horizon, words }
    }
}

impl fmt::Debug for FinitePrefixSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, n) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if k >= 32 {
                write!(f, "…")?;
                break;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}/[0,{})", self.horizon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_iteration_agree() {
        let s = FinitePrefixSet::from_members(100, [0, 3, 64, 65, 99]).unwrap();
        assert_eq!(s.count(), 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 64, 65, 99]);
        assert_eq!(s.count_through(64), 3);
        assert_eq!(s.count_in(3, 65), 2);
        assert_eq!(s.max_element(), Some(99));
        assert_eq!(s.next_member(4), Some(64));
        assert_eq!(s.next_member(66), Some(99));
    }

    #[test]
    fn out_of_window_member_rejected() {
        let e = FinitePrefixSet::from_members(4, [5]).unwrap_err();
        assert!(matches!(e, Error::OutOfWindow { n: 5, horizon: 4 }));
    }

    #[test]
    fn subset_and_disjoint() {
        let a = FinitePrefixSet::from_members(10, [1, 3, 5]).unwrap();
        let b = FinitePrefixSet::from_members(10, [1, 3, 5, 7]).unwrap();
        let c = FinitePrefixSet::from_members(10, [0, 2]).unwrap();
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(a.is_disjoint_from(&c));
        assert_eq!(
            a.intersect(&b).unwrap().iter().collect::<Vec<_>>(),
            vec![1, 3, 5]
        );
    }
}
