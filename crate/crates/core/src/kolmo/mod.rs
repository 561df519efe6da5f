//! Resource-bounded complexity over finite oracles, and the finite-universe
//! k-safety checks built on it.
//!
//! For a nonempty finite oracle s, the complexity of σ is the length of the
//! shortest program of length ≤ max(s) that emits σ while running at most
//! max(s) steps and never querying past max(s); if no such program exists the
//! value is ∞. All three budgets equal max(s), with no additive constants.
//! The value is computed by exhaustive shortest-first enumeration, which is
//! Θ(2^max(s)) — a hard cap keeps max(s) ≤ 16.

pub mod machine;

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::bits::Bitstring;
use crate::density::{count_meets, Rational};
use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;

use machine::{run_program, RunOutcome, ToyProgram};

/// Hard ceiling on max(s) for exhaustive enumeration.
pub const MAX_ORACLE_CAP: u64 = 16;

/// Default ceiling on (piece, subset) checks in the k-safety verifiers,
/// overridable via the SUBSETCODEC_BUDGET environment variable or an explicit
/// argument.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 22;

/// Resolves the enumeration budget: explicit argument, then the
/// SUBSETCODEC_BUDGET environment variable, then the default.
pub fn enumeration_budget(explicit: Option<u64>) -> u64 {
    explicit
        .or_else(|| {
            std::env::var("SUBSETCODEC_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_ENUMERATION_BUDGET)
}

fn oracle_cap(s: &FinitePrefixSet) -> Result<Option<u64>> {
    match s.max_element() {
        None => Ok(None),
        Some(m) if m > MAX_ORACLE_CAP => Err(Error::BudgetExceeded {
            done: 0,
            budget: MAX_ORACLE_CAP,
        }),
        Some(m) => Ok(Some(m)),
    }
}

/// C^s(σ): length of the shortest qualifying program, or None for ∞.
/// The empty oracle has no max, so every σ gets ∞.
pub fn c_finite(s: &FinitePrefixSet, sigma: &Bitstring) -> Result<Option<u64>> {
    let Some(max_s) = oracle_cap(s)? else {
        return Ok(None);
    };
    for len in 0..=max_s as u32 {
        for bits in 0..1u64 << len {
            let p = ToyProgram::from_packed(len, bits);
            if let RunOutcome::Halted(out) = run_program(&p, s, max_s, max_s) {
                if out == *sigma {
                    return Ok(Some(len as u64));
                }
            }
        }
    }
    Ok(None)
}

/// All strings of complexity < k relative to s, with their exact complexity.
/// There are always fewer than 2^k of them: each needs its own program of
/// length < k.
pub fn cheap_strings(s: &FinitePrefixSet, k: u32) -> Result<BTreeMap<Bitstring, u64>> {
    let mut out = BTreeMap::new();
    let Some(max_s) = oracle_cap(s)? else {
        return Ok(out);
    };
    let top = (k as u64).min(max_s + 1) as u32;
    for len in 0..top {
        for bits in 0..1u64 << len {
            let p = ToyProgram::from_packed(len, bits);
            if let RunOutcome::Halted(sigma) = run_program(&p, s, max_s, max_s) {
                out.entry(sigma).or_insert(len as u64);
            }
        }
    }
    Ok(out)
}

/// C(σ | ℱ) over an explicit finite family: the max of C^X(σ), with ∞
/// (None) absorbing.
pub fn c_family(sigma: &Bitstring, family: &[FinitePrefixSet]) -> Result<Option<u64>> {
    if family.is_empty() {
        return Err(Error::Parameter("family must be nonempty".into()));
    }
    let mut worst = Some(0u64);
    for member in family {
        match c_finite(member, sigma)? {
            None => return Ok(None),
            Some(c) => worst = worst.map(|w| w.max(c)),
        }
    }
    Ok(worst)
}

/// A k-safety instance over the truncated universe [0, N): a string family,
/// witness pieces, the subset-size floor m, and the complexity level k.
#[derive(Clone, Debug)]
pub struct KSafeInstance {
    pub strings: Vec<Bitstring>,
    pub pieces: Vec<FinitePrefixSet>,
    pub m: u64,
    pub k: u32,
}

impl KSafeInstance {
    fn universe(&self) -> Result<u64> {
        let first = self
            .pieces
            .first()
            .ok_or_else(|| Error::Parameter("at least one piece required".into()))?;
        if let Some(p) = self.pieces.iter().find(|p| p.horizon() != first.horizon()) {
            return Err(Error::Parameter(format!(
                "pieces live on different windows: {} vs {}",
                p.horizon(),
                first.horizon()
            )));
        }
        Ok(first.horizon())
    }

    fn distinct_strings(&self) -> Result<()> {
        let set: BTreeSet<&Bitstring> = self.strings.iter().collect();
        if set.len() != self.strings.len() {
            return Err(Error::Parameter("string family has duplicates".into()));
        }
        Ok(())
    }
}

/// A failed check, pointing at the offending pieces and oracle subset.
#[derive(Clone, Debug)]
pub struct KSafeCounterexample {
    pub pieces: Vec<usize>,
    pub subset: Vec<u64>,
    pub revealed: u64,
}

#[derive(Clone, Debug)]
pub struct KSafeVerdict {
    pub holds: bool,
    pub counterexample: Option<KSafeCounterexample>,
    pub checks: u64,
}

/// Plain k-safety over a finite universe: the pieces must partition [0, N),
/// and for every piece X_i and every subset s ⊆ X_i with |s| ≥ m, the strings
/// of complexity < k relative to s together with F must number at most 2^k.
pub fn k_safe_check(inst: &KSafeInstance, budget: Option<u64>) -> Result<KSafeVerdict> {
    let universe = inst.universe()?;
    inst.distinct_strings()?;
    let mut union = 0u64;
    for p in &inst.pieces {
        union += p.count();
    }
    let mut covered = FinitePrefixSet::empty(universe);
    for p in &inst.pieces {
        for e in p.iter() {
            covered.insert(e);
        }
    }
    if covered.count() != universe || union != universe {
        return Err(Error::InvalidPartition(
            "pieces must partition the universe".into(),
        ));
    }

    let budget = enumeration_budget(budget);
    let limit = 1u128 << inst.k.min(64);
    let mut checks = 0u64;
    for (pi, piece) in inst.pieces.iter().enumerate() {
        let members: Vec<u64> = piece.iter().collect();
        let mut verdict = None;
        for_each_subset(&members, inst.m, budget, &mut checks, &mut |subset| {
            let s = FinitePrefixSet::from_members(universe, subset.iter().copied())?;
            let cheap = cheap_strings(&s, inst.k)?;
            let extra = inst
                .strings
                .iter()
                .filter(|t| !cheap.contains_key(*t))
                .count() as u128;
            let revealed = cheap.len() as u128 + extra;
            if revealed > limit {
                verdict = Some(KSafeCounterexample {
                    pieces: vec![pi],
                    subset: subset.to_vec(),
                    revealed: revealed as u64,
                });
                return Ok(false);
            }
            Ok(true)
        })?;
        if let Some(cx) = verdict {
            return Ok(KSafeVerdict {
                holds: false,
                counterexample: Some(cx),
                checks,
            });
        }
    }
    Ok(KSafeVerdict {
        holds: true,
        counterexample: None,
        checks,
    })
}

/// k-safety at density δ: each string τ_i is paired with its own witness
/// piece X_i, every piece must be δ-dense at every window point, and for each
/// subfamily i_1 < … < i_l and each subset s of the intersection with
/// |s| ≥ m, the strings cheap relative to s together with {τ_{i_1}, …,
/// τ_{i_l}} must number at most 2^k.
pub fn k_safe_density_check(
    inst: &KSafeInstance,
    delta: Rational,
    budget: Option<u64>,
) -> Result<KSafeVerdict> {
    let universe = inst.universe()?;
    inst.distinct_strings()?;
    if inst.strings.len() != inst.pieces.len() {
        return Err(Error::Parameter(format!(
            "{} strings but {} pieces; the density form pairs them 1:1",
            inst.strings.len(),
            inst.pieces.len()
        )));
    }
    for (i, p) in inst.pieces.iter().enumerate() {
        let mut count = 0;
        for n in 0..universe {
            count += p.bit(n) as u64;
            if !count_meets(count, n, delta) {
                return Err(Error::Parameter(format!(
                    "piece {i} is not {delta}-dense at {n}"
                )));
            }
        }
    }

    let budget = enumeration_budget(budget);
    let limit = 1u128 << inst.k.min(64);
    let mut checks = 0u64;
    let n_pieces = inst.pieces.len();
    for mask in 1u64..1 << n_pieces {
        let indices: Vec<usize> = (0..n_pieces).filter(|i| mask >> i & 1 == 1).collect();
        let mut inter = inst.pieces[indices[0]].clone();
        for &i in &indices[1..] {
            inter = inter.intersect(&inst.pieces[i])?;
        }
        let members: Vec<u64> = inter.iter().collect();
        let mut verdict = None;
        for_each_subset(&members, inst.m, budget, &mut checks, &mut |subset| {
            let s = FinitePrefixSet::from_members(universe, subset.iter().copied())?;
            let cheap = cheap_strings(&s, inst.k)?;
            let extra = indices
                .iter()
                .filter(|i| !cheap.contains_key(&inst.strings[**i]))
                .count() as u128;
            let revealed = cheap.len() as u128 + extra;
            if revealed > limit {
                verdict = Some(KSafeCounterexample {
                    pieces: indices.clone(),
                    subset: subset.to_vec(),
                    revealed: revealed as u64,
                });
                return Ok(false);
            }
            Ok(true)
        })?;
        if let Some(cx) = verdict {
            return Ok(KSafeVerdict {
                holds: false,
                counterexample: Some(cx),
                checks,
            });
        }
    }
    Ok(KSafeVerdict {
        holds: true,
        counterexample: None,
        checks,
    })
}

/// Runs the callback on every subset of `members` with at least `min_size`
/// elements, stopping early when it returns false. Each invocation costs one
/// unit of budget.
fn for_each_subset(
    members: &[u64],
    min_size: u64,
    budget: u64,
    checks: &mut u64,
    callback: &mut impl FnMut(&[u64]) -> Result<bool>,
) -> Result<()> {
    if members.len() >= 64 {
        return Err(Error::Parameter(
            "piece too large for subset enumeration".into(),
        ));
    }
    for mask in 0u64..1 << members.len() {
        if (mask.count_ones() as u64) < min_size {
            continue;
        }
        *checks += 1;
        if *checks > budget {
            return Err(Error::BudgetExceeded {
                done: *checks,
                budget,
            });
        }
        let subset: Vec<u64> = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        if !callback(&subset)? {
            return Ok(());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn orc(members: &[u64]) -> FinitePrefixSet {
        FinitePrefixSet::from_members(17, members.iter().copied()).unwrap()
    }

    #[test]
    fn empty_string_costs_nothing() {
        // The empty program halts with ε, so C^s(ε) = 0 for any nonempty s.
        assert_eq!(c_finite(&orc(&[0]), &Bitstring::new()).unwrap(), Some(0));
        assert_eq!(c_finite(&orc(&[9]), &Bitstring::new()).unwrap(), Some(0));
    }

    #[test]
    fn empty_oracle_gives_infinity() {
        let s = FinitePrefixSet::empty(8);
        assert_eq!(c_finite(&s, &Bitstring::new()).unwrap(), None);
    }

    #[test]
    fn tight_budgets_give_infinity() {
        // Emitting "0" needs EMIT0 HALT = 6 bits; max(s) = 3 cannot afford it.
        let sigma = Bitstring::from_str("0").unwrap();
        assert_eq!(c_finite(&orc(&[3]), &sigma).unwrap(), None);
        assert_eq!(c_finite(&orc(&[3, 9]), &sigma).unwrap(), Some(6));
    }

    #[test]
    fn literal_guarantee_bounds_complexity() {
        for s in ["", "1", "10", "011"] {
            let sigma = Bitstring::from_str(s).unwrap();
            let c = c_finite(&orc(&[16]), &sigma).unwrap().unwrap();
            assert!(c <= 3 * sigma.len() + 3, "C({s}) = {c}");
        }
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let s = FinitePrefixSet::from_members(64, [17]).unwrap();
        assert!(matches!(
            c_finite(&s, &Bitstring::new()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn counting_bound_for_small_oracles() {
        for max in 1..=8u64 {
            let s = FinitePrefixSet::from_members(17, [0, max]).unwrap();
            for k in 1..=5u32 {
                let cheap = cheap_strings(&s, k).unwrap();
                assert!((cheap.len() as u64) < 1 << k, "max {max}, k {k}");
                for (sigma, c) in &cheap {
                    assert_eq!(c_finite(&s, sigma).unwrap(), Some(*c));
                }
            }
        }
    }

    #[test]
    fn family_complexity_is_the_max() {
        let sigma = Bitstring::from_str("0").unwrap();
        let rich = orc(&[16]);
        let poor = orc(&[3]);
        let just = orc(&[6]);
        assert_eq!(
            c_family(&sigma, &[rich.clone(), just.clone()]).unwrap(),
            Some(6)
        );
        assert_eq!(c_family(&sigma, &[rich.clone(), poor]).unwrap(), None);
        assert_eq!(
            c_family(&sigma, &[rich.clone()]).unwrap(),
            c_finite(&rich, &sigma).unwrap()
        );
        assert!(c_family(&sigma, &[]).is_err());
    }

    fn partition_of(universe: u64, k: usize) -> Vec<FinitePrefixSet> {
        (0..k)
            .map(|i| FinitePrefixSet::from_fn(universe, |n| n as usize % k == i))
            .collect()
    }

    #[test]
    fn empty_family_is_always_safe() {
        let inst = KSafeInstance {
            strings: vec![],
            pieces: partition_of(10, 3),
            m: 0,
            k: 3,
        };
        let v = k_safe_check(&inst, None).unwrap();
        assert!(v.holds, "checked {} subsets", v.checks);
    }

    #[test]
    fn oversized_family_fails() {
        let strings: Vec<Bitstring> = (0..9).map(|n| crate::bits::string_of_index(n)).collect();
        let inst = KSafeInstance {
            strings,
            pieces: partition_of(10, 2),
            m: 2,
            k: 3,
        };
        let v = k_safe_check(&inst, None).unwrap();
        assert!(!v.holds);
        let cx = v.counterexample.unwrap();
        assert!(cx.revealed > 8);
        assert!(cx.subset.len() >= 2);
    }

    #[test]
    fn unreachable_floor_is_vacuously_safe() {
        let strings: Vec<Bitstring> = (0..9).map(|n| crate::bits::string_of_index(n)).collect();
        let inst = KSafeInstance {
            strings,
            pieces: partition_of(10, 2),
            m: 11,
            k: 3,
        };
        assert!(k_safe_check(&inst, None).unwrap().holds);
    }

    #[test]
    fn non_partition_is_rejected() {
        let inst = KSafeInstance {
            strings: vec![],
            pieces: vec![FinitePrefixSet::from_fn(10, |n| n < 6)],
            m: 0,
            k: 2,
        };
        assert!(matches!(
            k_safe_check(&inst, None),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn budget_error_reports_progress() {
        let inst = KSafeInstance {
            strings: vec![],
            pieces: partition_of(12, 1),
            m: 0,
            k: 1,
        };
        let e = k_safe_check(&inst, Some(10)).unwrap_err();
        assert!(matches!(e, Error::BudgetExceeded { done: 11, budget: 10 }));
    }

    #[test]
    fn density_form_single_piece_matches_plain_semantics() {
        let tau = Bitstring::from_str("0").unwrap();
        let inst = KSafeInstance {
            strings: vec![tau],
            pieces: vec![FinitePrefixSet::full(8)],
            m: 1,
            k: 2,
        };
        let v = k_safe_density_check(&inst, Rational::new(1, 1), None).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn density_form_oversized_family_fails() {
        let strings: Vec<Bitstring> = (0..9).map(|n| crate::bits::string_of_index(n)).collect();
        let pieces = vec![FinitePrefixSet::full(6); 9];
        let inst = KSafeInstance {
            strings,
            pieces,
            m: 1,
            k: 3,
        };
        let v = k_safe_density_check(&inst, Rational::new(1, 1), None).unwrap();
        assert!(!v.holds);
        let cx = v.counterexample.unwrap();
        assert!(cx.revealed > 8);
        assert!(cx.pieces.len() >= 8);
    }

    #[test]
    fn density_form_rejects_sparse_pieces() {
        let tau = Bitstring::from_str("0").unwrap();
        let inst = KSafeInstance {
            strings: vec![tau],
            pieces: vec![FinitePrefixSet::from_members(8, [0]).unwrap()],
            m: 1,
            k: 2,
        };
        assert!(k_safe_density_check(&inst, Rational::new(1, 2), None).is_err());
    }
}
