use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;

/// A finite partial map ℕ → {0, 1}. Lookups outside the domain are `None`,
/// distinguishable from a stored 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialBitFunction {
    entries: BTreeMap<u64, u8>,
}

impl PartialBitFunction {
    pub fn new() -> Self {
        Self::default()
    }

    /// Defines f(x) = bit. Redefining a point to a different value is an error.
    pub fn define(&mut self, x: u64, bit: u8) -> Result<()> {
        if bit > 1 {
            return Err(Error::Parameter(format!("bit value {bit} out of range")));
        }
        match self.entries.insert(x, bit) {
            Some(old) if old != bit => Err(Error::Parameter(format!(
                "point {x} redefined from {old} to {bit}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn get(&self, x: u64) -> Option<u8> {
        self.entries.get(&x).copied()
    }

    pub fn is_defined(&self, x: u64) -> bool {
        self.entries.contains_key(&x)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u8)> + '_ {
        self.entries.iter().map(|(x, b)| (*x, *b))
    }

    pub fn domain(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    /// Whether this function agrees with the characteristic function of `a`
    /// at every defined point inside the window.
    pub fn agrees_with_set(&self, a: &FinitePrefixSet) -> bool {
        self.iter()
            .all(|(x, b)| x >= a.horizon() || a.bit(x) == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn define_and_lookup() {
        let mut f = PartialBitFunction::new();
        f.define(3, 1).unwrap();
        f.define(7, 0).unwrap();
        assert_eq!(f.get(3), Some(1));
        assert_eq!(f.get(7), Some(0));
        assert_eq!(f.get(5), None);
        assert!(f.is_defined(7) && !f.is_defined(5));
        // Same value is idempotent, a flip is rejected.
        f.define(3, 1).unwrap();
        assert!(f.define(3, 0).is_err());
        assert!(f.define(9, 2).is_err());
    }

    #[test]
    fn agreement_with_a_set() {
        let a = FinitePrefixSet::from_members(8, [1, 4]).unwrap();
        let mut f = PartialBitFunction::new();
        f.define(1, 1).unwrap();
        f.define(2, 0).unwrap();
        assert!(f.agrees_with_set(&a));
        f.define(4, 0).unwrap();
        assert!(!f.agrees_with_set(&a));
    }
}
