//! The even/odd split: n goes to 2n when it is in the set and to 2n+1 when it
//! is not, so the image always keeps exactly one of each pair and any element
//! of any subsample reveals one bit of the original characteristic function.

use crate::error::{Error, Result};
use crate::partial::PartialBitFunction;
use crate::set::FinitePrefixSet;

/// The split image over `[0, 2·horizon)`: bit 2n = A(n), bit 2n+1 = 1 − A(n).
pub fn evenodd_split(a: &FinitePrefixSet) -> FinitePrefixSet {
    let horizon = a
        .horizon()
        .checked_mul(2)
        .expect("split window exceeds the representable range");
    let mut b = FinitePrefixSet::empty(horizon);
    for n in 0..a.horizon() {
        if a.contains(n) {
            b.insert(2 * n);
        } else {
            b.insert(2 * n + 1);
        }
    }
    b
}

/// What a subsample of a split set reveals.
pub struct EvenOddParts {
    /// {n : 2n ∈ C} — a subset of the original set when C ⊆ split(A).
    pub even: FinitePrefixSet,
    /// {n : 2n+1 ∈ C} — disjoint from the original set when C ⊆ split(A).
    pub odd: FinitePrefixSet,
    /// The recovered fragment of the characteristic function.
    pub partial: PartialBitFunction,
}

/// Reads a subsample apart. A sample holding both 2n and 2n+1 cannot be a
/// subset of any split image and is rejected.
pub fn evenodd_extract(c: &FinitePrefixSet) -> Result<EvenOddParts> {
    let half = c.horizon().div_ceil(2);
    let mut even = FinitePrefixSet::empty(half);
    let mut odd = FinitePrefixSet::empty(half);
    let mut partial = PartialBitFunction::new();
    for n in 0..half {
        let has_even = c.contains(2 * n);
        let has_odd = c.contains(2 * n + 1);
        if has_even && has_odd {
            return Err(Error::InconsistentSample {
                even: 2 * n,
                odd: 2 * n + 1,
            });
        }
        if has_even {
            even.insert(n);
            partial.define(n, 1)?;
        } else if has_odd {
            odd.insert(n);
            partial.define(n, 0)?;
        }
    }
    Ok(EvenOddParts { even, odd, partial })
}
