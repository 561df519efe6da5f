//! Exact density arithmetic over finite prefixes.
//!
//! Every verdict here is an exact rational comparison; nothing in this module
//! touches floating point. Throughout, "density at n" means |A ∩ [0, n]| / (n+1)
//! with a closed upper endpoint.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;

/// Exact rational used everywhere a density, threshold or ratio appears.
pub type Rational = Rational64;

/// True iff `count / (n+1) ≥ bound`, computed without division.
pub(crate) fn count_meets(count: u64, n: u64, bound: Rational) -> bool {
    // bound.denom() > 0 by Ratio's invariant.
    (count as i128) * (*bound.denom() as i128) >= (*bound.numer() as i128) * (n as i128 + 1)
}

/// d_A(n) = |A ∩ [0, n]| / (n + 1), exactly.
pub fn density_at(a: &FinitePrefixSet, n: u64) -> Result<Rational> {
    if n >= a.horizon() {
        return Err(Error::OutOfWindow {
            n,
            horizon: a.horizon(),
        });
    }
    Ok(Rational::new(a.count_through(n) as i64, n as i64 + 1))
}

/// Whether A is δ-dense at the single point n: |A ∩ [0, n]| ≥ δ·(n+1).
pub fn is_delta_dense_at(a: &FinitePrefixSet, delta: Rational, n: u64) -> Result<bool> {
    if n >= a.horizon() {
        return Err(Error::OutOfWindow {
            n,
            horizon: a.horizon(),
        });
    }
    Ok(count_meets(a.count_through(n), n, delta))
}

/// Whether A is δ-dense at every point of D. Taking D to be the full window
/// gives the plain δ-dense check.
pub fn is_delta_dense_along(
    a: &FinitePrefixSet,
    delta: Rational,
    d: &FinitePrefixSet,
) -> Result<bool> {
    if d.horizon() > a.horizon() {
        return Err(Error::Parameter(format!(
            "check window [0, {}) exceeds the set window [0, {})",
            d.horizon(),
            a.horizon()
        )));
    }
    let mut count = 0u64;
    let mut next = d.next_member(0);
    for n in 0..d.horizon() {
        count += a.bit(n) as u64;
        if next == Some(n) {
            if !count_meets(count, n, delta) {
                return Ok(false);
            }
            next = d.next_member(n + 1);
        }
    }
    Ok(true)
}

/// The full sequence d_A(0), d_A(1), …, d_A(horizon−1) as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityProfile {
    horizon: u64,
    values: Vec<Rational>,
}

impl DensityProfile {
    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, n: u64) -> Result<Rational> {
        self.values
            .get(n as usize)
            .copied()
            .ok_or(Error::OutOfWindow {
                n,
                horizon: self.horizon,
            })
    }
}

pub fn density_profile(a: &FinitePrefixSet) -> DensityProfile {
    let mut values = Vec::with_capacity(a.horizon() as usize);
    let mut count = 0i64;
    for n in 0..a.horizon() {
        count += a.bit(n) as i64;
        values.push(Rational::new(count, n as i64 + 1));
    }
    DensityProfile {
        horizon: a.horizon(),
        values,
    }
}

/// Whether d_A(n) ≥ f(n) at every window point. `f` must yield an exact
/// rational lower bound per point.
pub fn is_f_dense<F: FnMut(u64) -> Rational>(a: &FinitePrefixSet, mut f: F) -> bool {
    let mut count = 0u64;
    for n in 0..a.horizon() {
        count += a.bit(n) as u64;
        if !count_meets(count, n, f(n)) {
            return false;
        }
    }
    true
}

/// First window point where d_A(n) < f(n), if any. Companion to [`is_f_dense`]
/// for diagnostics.
pub fn first_f_density_failure<F: FnMut(u64) -> Rational>(
    a: &FinitePrefixSet,
    mut f: F,
) -> Option<u64> {
    let mut count = 0u64;
    (0..a.horizon()).find(|&n| {
        count += a.bit(n) as u64;
        !count_meets(count, n, f(n))
    })
}

/// Exact rational stand-in for 1/√(n+1): the value 1/⌊√(n+1)⌋, which is
/// monotone non-increasing and ≥ 1/√(n+1), so f-density against it is the
/// stronger check.
pub fn inv_floor_sqrt(n: u64) -> Rational {
    Rational::new(1, isqrt(n + 1) as i64)
}

/// ⌊√x⌋ for x ≥ 1.
pub fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    // Float seeding only; the result is fixed up exactly in integers.
    while r > 0 && (r as u128) * (r as u128) > x as u128 {
        r -= 1;
    }
    while ((r as u128) + 1) * ((r as u128) + 1) <= x as u128 {
        r += 1;
    }
    r
}
