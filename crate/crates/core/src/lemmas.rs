//! Brute-force verifiers and witness-finders for the finite combinatorial
//! facts behind the codecs: the pairwise-overlap (variance) bound, the cap on
//! disjoint dense families, and the partition pigeonhole.
//!
//! Conventions differ between the overlap lemma and the density checks: the
//! overlap lemma lives on [0, n) with sizes measured against n, while
//! "δ-dense at n" uses the closed prefix [0, n] against n+1.

use crate::density::{count_meets, Rational};
use crate::error::{Error, Result};
use crate::set::FinitePrefixSet;

/// A family of subsets of a common universe [0, n).
#[derive(Clone, Debug)]
pub struct SubsetFamily {
    universe: u64,
    members: Vec<FinitePrefixSet>,
}

impl SubsetFamily {
    pub fn new(universe: u64, members: Vec<FinitePrefixSet>) -> Result<Self> {
        if let Some(m) = members.iter().find(|m| m.horizon() != universe) {
            return Err(Error::Parameter(format!(
                "family member has window [0, {}), expected [0, {universe})",
                m.horizon()
            )));
        }
        Ok(SubsetFamily { universe, members })
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn members(&self) -> &[FinitePrefixSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// In-place access for enumeration sweeps that mutate one family instead
    /// of rebuilding it per candidate. Horizons must be preserved.
    pub(crate) fn members_mut(&mut self) -> &mut [FinitePrefixSet] {
        &mut self.members
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    pub ratio: Rational,
}

/// The pair i < j maximizing |A_i ∩ A_j| / n, ties broken by least (i, j).
pub fn variance_pair_witness(fam: &SubsetFamily) -> Result<PairWitness> {
    if fam.universe() == 0 {
        return Err(Error::Parameter("universe must be nonempty".into()));
    }
    if fam.len() < 2 {
        return Err(Error::Parameter(format!(
            "need at least 2 members, got {}",
            fam.len()
        )));
    }
    let mut best: Option<PairWitness> = None;
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            let overlap = fam.members[i].intersect(&fam.members[j])?.count();
            let ratio = Rational::new(overlap as i64, fam.universe() as i64);
            if best.is_none_or(|b| ratio > b.ratio) {
                best = Some(PairWitness { i, j, ratio });
            }
        }
    }
    Ok(best.unwrap())
}

/// Σ_{i≠j} |A_i ∩ A_j| / n over ordered pairs, exactly — the quantity the
/// nonnegative-variance identity bounds from below by y² − y.
pub fn pairwise_overlap_sum(fam: &SubsetFamily) -> Result<Rational> {
    if fam.universe() == 0 {
        return Err(Error::Parameter("universe must be nonempty".into()));
    }
    let mut total = 0i64;
    for i in 0..fam.len() {
        for j in 0..fam.len() {
            if i != j {
                total += fam.members[i].intersect(&fam.members[j])?.count() as i64;
            }
        }
    }
    Ok(Rational::new(total, fam.universe() as i64))
}

/// Σ |A_i| / n.
pub fn mass_sum(fam: &SubsetFamily) -> Result<Rational> {
    if fam.universe() == 0 {
        return Err(Error::Parameter("universe must be nonempty".into()));
    }
    let total: u64 = fam.members.iter().map(|m| m.count()).sum();
    Ok(Rational::new(total as i64, fam.universe() as i64))
}

/// ⌈2/δ⌉ — a family this large among δn-sized sets always has a pair with
/// overlap ratio ≥ δ²/2.
pub fn min_family_size(delta: Rational) -> Result<u64> {
    let (p, q) = (*delta.numer(), *delta.denom());
    if p <= 0 || p > q {
        return Err(Error::Parameter(format!(
            "density must lie in (0, 1], got {delta}"
        )));
    }
    Ok(((2 * q as u128 + p as u128 - 1) / p as u128) as u64)
}

/// True iff the members are pairwise disjoint and each is δ/2-dense at n.
/// A true verdict caps the family size at 2/δ, which is asserted.
pub fn disjoint_dense_bound_check(
    fam: &SubsetFamily,
    delta: Rational,
    n: u64,
) -> Result<bool> {
    let (p, q) = (*delta.numer(), *delta.denom());
    if p <= 0 || p > q {
        return Err(Error::Parameter(format!(
            "density must lie in (0, 1], got {delta}"
        )));
    }
    if n >= fam.universe() {
        return Err(Error::OutOfWindow {
            n,
            horizon: fam.universe(),
        });
    }
    let half = delta / 2;
    for m in fam.members() {
        if !count_meets(m.count_through(n), n, half) {
            return Ok(false);
        }
    }
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            if !fam.members[i].is_disjoint_from(&fam.members[j]) {
                return Ok(false);
            }
        }
    }
    // Disjoint δ/2-dense-at-n subsets of [0, n] cannot number more than 2/δ.
    assert!(
        fam.len() as i128 * p as i128 <= 2 * q as i128,
        "counting bound breached: {} disjoint sets at density {delta}/2",
        fam.len()
    );
    Ok(true)
}

/// Exhaustively searches for `size` pairwise-disjoint subsets of [0, n], each
/// δ/2-dense at n. Returns a witness family or None if none exists. Only the
/// minimum qualifying cardinality is enumerated: shrinking any larger member
/// preserves disjointness and the density floor.
pub fn find_disjoint_dense_family(
    n: u64,
    delta: Rational,
    size: u64,
    budget: u64,
) -> Result<Option<Vec<Vec<u64>>>> {
    let (p, q) = (*delta.numer(), *delta.denom());
    if p <= 0 || p > q {
        return Err(Error::Parameter(format!(
            "density must lie in (0, 1], got {delta}"
        )));
    }
    if n >= 63 {
        return Err(Error::Parameter("exhaustive search needs n < 63".into()));
    }
    // Least cardinality that is δ/2-dense at n: ⌈δ(n+1)/2⌉.
    let member_size = ((p as u128 * (n as u128 + 1) + 2 * q as u128 - 1) / (2 * q as u128)) as u32;
    let member_size = member_size.max(1);
    let universe: u64 = (1u64 << (n + 1)) - 1;
    let mut nodes = 0u64;
    let mut picked: Vec<u64> = Vec::new();
    let found = search_disjoint(
        universe,
        size,
        member_size,
        &mut picked,
        &mut nodes,
        budget,
    )?;
    Ok(found.then(|| {
        picked
            .iter()
            .map(|mask| (0..=n).filter(|e| mask >> e & 1 == 1).collect())
            .collect()
    }))
}

fn search_disjoint(
    remaining: u64,
    need: u64,
    member_size: u32,
    picked: &mut Vec<u64>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded {
            done: *nodes,
            budget,
        });
    }
    if need == 0 {
        return Ok(true);
    }
    if remaining.count_ones() < member_size * need as u32 {
        return Ok(false);
    }
    let lowest = remaining & remaining.wrapping_neg();
    // Either the lowest remaining element goes unused by every future set,
    // or it belongs to the next set; families are enumerated in order of
    // their smallest used elements, so this covers everything once.
    if search_disjoint(remaining & !lowest, need, member_size, picked, nodes, budget)? {
        return Ok(true);
    }
    let rest = remaining & !lowest;
    let mut combo: Vec<u64> = Vec::new();
    search_combinations(
        rest,
        member_size - 1,
        lowest,
        &mut combo,
        &mut |set_mask, rem| {
            picked.push(set_mask);
            let r = search_disjoint(rem, need - 1, member_size, picked, nodes, budget)?;
            if !r {
                picked.pop();
            }
            Ok(r)
        },
    )
}

/// Enumerates `take`-element submasks of `pool`, invoking the callback with
/// (base ∪ submask, pool \ submask) until it reports success.
fn search_combinations(
    pool: u64,
    take: u32,
    base: u64,
    chosen: &mut Vec<u64>,
    callback: &mut impl FnMut(u64, u64) -> Result<bool>,
) -> Result<bool> {
    if take == 0 {
        let picked = base | chosen.iter().fold(0, |a, b| a | b);
        return callback(picked, pool & !picked);
    }
    let mut candidates = pool & !chosen.iter().fold(0, |a, b| a | b);
    // Only elements above the last chosen one, to enumerate each combination once.
    if let Some(last) = chosen.last() {
        candidates &= !(((*last) << 1).wrapping_sub(1));
    }
    while candidates != 0 {
        let bit = candidates & candidates.wrapping_neg();
        chosen.push(bit);
        if search_combinations(pool, take - 1, base, chosen, callback)? {
            return Ok(true);
        }
        chosen.pop();
        candidates &= !bit;
    }
    Ok(false)
}

/// Least index of a part that is δ/k-dense at n, for a family of k parts that
/// partitions a set B that is itself δ-dense at n. The pigeonhole guarantees
/// a witness whenever the preconditions hold.
pub fn partition_density_witness(
    b: &FinitePrefixSet,
    parts: &SubsetFamily,
    delta: Rational,
    n: u64,
) -> Result<usize> {
    if parts.universe() != b.horizon() {
        return Err(Error::Parameter(format!(
            "parts live on [0, {}), set on [0, {})",
            parts.universe(),
            b.horizon()
        )));
    }
    if parts.is_empty() {
        return Err(Error::InvalidPartition("no parts supplied".into()));
    }
    if n >= b.horizon() {
        return Err(Error::OutOfWindow {
            n,
            horizon: b.horizon(),
        });
    }
    let mut union_count = 0u64;
    let mut sum_counts = 0u64;
    let words = b.words().len();
    for w in 0..words {
        let mut acc = 0u64;
        for part in parts.members() {
            acc |= part.words()[w];
        }
        if acc != b.words()[w] {
            return Err(Error::InvalidPartition(
                "parts do not union to the set".into(),
            ));
        }
        union_count += acc.count_ones() as u64;
    }
    for part in parts.members() {
        sum_counts += part.count();
    }
    if sum_counts != union_count {
        return Err(Error::InvalidPartition("parts overlap".into()));
    }

    let (p, q) = (*delta.numer(), *delta.denom());
    if !count_meets(b.count_through(n), n, delta) {
        return Err(Error::Precondition(format!(
            "set is not {delta}-dense at {n}"
        )));
    }
    let k = parts.len() as i128;
    for (i, part) in parts.members().iter().enumerate() {
        // part is (δ/k)-dense at n ⟺ count·k·q ≥ p·(n+1)
        let count = part.count_through(n) as i128;
        if count * k * q as i128 >= p as i128 * (n as i128 + 1) {
            return Ok(i);
        }
    }
    unreachable!("pigeonhole: some part must be δ/k-dense when B is δ-dense");
}

/// Searches for `k` distinct admissible subsets of [0, n) (each of size at
/// least `min_size`) whose pairwise overlap ratios all fall below `bound` —
/// a counterexample family for the overlap lemma. Returns the member masks
/// if one exists.
pub fn variance_violation_search(
    n: u64,
    min_size: u32,
    k: usize,
    bound: Rational,
    budget: u64,
) -> Result<Option<Vec<u64>>> {
    if n == 0 || n >= 63 {
        return Err(Error::Parameter("universe size must be in [1, 63)".into()));
    }
    // Ratios are nonnegative, so a nonpositive bound cannot be violated.
    if *bound.numer() <= 0 {
        return Ok(None);
    }
    let masks: Vec<u64> = (0u64..1 << n)
        .filter(|m| m.count_ones() >= min_size)
        .collect();
    let below = |a: u64, b: u64| {
        let overlap = (a & b).count_ones() as i128;
        overlap * (*bound.denom() as i128) < *bound.numer() as i128 * n as i128
    };
    let mut nodes = 0u64;
    let mut chosen: Vec<usize> = Vec::new();
    let all: Vec<usize> = (0..masks.len()).collect();
    if extend_clique(&masks, &below, &all, k, &mut chosen, &mut nodes, budget)? {
        return Ok(Some(chosen.iter().map(|&i| masks[i]).collect()));
    }
    Ok(None)
}

fn extend_clique(
    masks: &[u64],
    below: &impl Fn(u64, u64) -> bool,
    candidates: &[usize],
    need: usize,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded {
            done: *nodes,
            budget,
        });
    }
    if need == 0 {
        return Ok(true);
    }
    if candidates.len() < need {
        return Ok(false);
    }
    for (pos, &v) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&u| below(masks[v], masks[u]))
            .collect();
        chosen.push(v);
        if extend_clique(masks, below, &next, need - 1, chosen, nodes, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(universe: u64, sets: &[&[u64]]) -> SubsetFamily {
        let members = sets
            .iter()
            .map(|s| FinitePrefixSet::from_members(universe, s.iter().copied()).unwrap())
            .collect();
        SubsetFamily::new(universe, members).unwrap()
    }

    #[test]
    fn identical_members_witness_their_own_mass() {
        let f = fam(4, &[&[0, 1], &[0, 1]]);
        let w = variance_pair_witness(&f).unwrap();
        assert_eq!((w.i, w.j), (0, 1));
        assert_eq!(w.ratio, Rational::new(1, 2));
    }

    #[test]
    fn witness_pins_stated_family() {
        let f = fam(4, &[&[0, 1], &[2, 3], &[0, 2], &[1, 3]]);
        let w = variance_pair_witness(&f).unwrap();
        assert_eq!(w.ratio, Rational::new(1, 4));
        // Oracle: brute-force maximum over all pairs.
        let mut best = Rational::new(0, 1);
        for i in 0..4 {
            for j in i + 1..4 {
                let o = f.members()[i].intersect(&f.members()[j]).unwrap().count();
                best = best.max(Rational::new(o as i64, 4));
            }
        }
        assert_eq!(w.ratio, best);
        // Least-index tie break: (0, 2) is the first pair reaching 1/4.
        assert_eq!((w.i, w.j), (0, 2));
    }

    #[test]
    fn witness_needs_two_members() {
        let f = fam(4, &[&[0]]);
        assert!(matches!(
            variance_pair_witness(&f),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn variance_identity_lower_bound_holds_exactly() {
        let f = fam(8, &[&[0, 1, 2, 3], &[2, 3, 4, 5], &[0, 3, 5, 7], &[1, 2, 6, 7]]);
        let s = pairwise_overlap_sum(&f).unwrap();
        let y = mass_sum(&f).unwrap();
        assert!(s >= y * y - y);
        let k = f.len() as i64;
        let w = variance_pair_witness(&f).unwrap();
        assert!(w.ratio >= (y * y - y) / Rational::new(k * k, 1));
    }

    #[test]
    fn min_family_size_examples() {
        assert_eq!(min_family_size(Rational::new(1, 2)).unwrap(), 4);
        assert_eq!(min_family_size(Rational::new(1, 1)).unwrap(), 2);
        assert_eq!(min_family_size(Rational::new(1, 3)).unwrap(), 6);
        assert!(min_family_size(Rational::new(0, 1)).is_err());
    }

    #[test]
    fn disjoint_dense_verdicts() {
        // Three disjoint 3-element subsets of [0, 10) are (1/4)-dense at 9.
        let f = fam(10, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]]);
        assert!(disjoint_dense_bound_check(&f, Rational::new(1, 2), 9).unwrap());

        // Overlap spoils the verdict.
        let g = fam(10, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(!disjoint_dense_bound_check(&g, Rational::new(1, 2), 9).unwrap());

        // Too sparse a member spoils the verdict.
        let h = fam(10, &[&[0, 1, 2], &[3]]);
        assert!(!disjoint_dense_bound_check(&h, Rational::new(1, 2), 9).unwrap());

        // Out-of-range density is a parameter error.
        assert!(matches!(
            disjoint_dense_bound_check(&f, Rational::new(2, 1), 9),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn no_oversized_disjoint_family_exists() {
        // δ = 1/2 at n = 9: five disjoint 3-subsets need 15 > 10 points.
        let found = find_disjoint_dense_family(9, Rational::new(1, 2), 5, 1 << 22).unwrap();
        assert!(found.is_none());
        // But four exist: 4·3 = 12 > 10 — no. Three do.
        let three = find_disjoint_dense_family(9, Rational::new(1, 2), 3, 1 << 22).unwrap();
        assert!(three.is_some());
        let fam_sets = three.unwrap();
        assert_eq!(fam_sets.len(), 3);
        assert!(fam_sets.iter().all(|s| s.len() >= 3));

        // δ = 1: at most 2 disjoint (1/2)-dense sets at any n.
        for n in 0..8u64 {
            let over = find_disjoint_dense_family(n, Rational::new(1, 1), 3, 1 << 22).unwrap();
            assert!(over.is_none(), "n = {n}");
        }
    }

    #[test]
    fn pigeonhole_witness_examples() {
        let b = FinitePrefixSet::full(10);
        let evens = FinitePrefixSet::from_fn(10, |n| n % 2 == 0);
        let odds = FinitePrefixSet::from_fn(10, |n| n % 2 == 1);
        let parts = SubsetFamily::new(10, vec![evens, odds]).unwrap();
        let idx = partition_density_witness(&b, &parts, Rational::new(1, 1), 9).unwrap();
        assert_eq!(idx, 0);

        // A single part is always its own witness.
        let whole = SubsetFamily::new(10, vec![b.clone()]).unwrap();
        assert_eq!(
            partition_density_witness(&b, &whole, Rational::new(1, 1), 9).unwrap(),
            0
        );
    }

    #[test]
    fn pigeonhole_error_paths() {
        let b = FinitePrefixSet::full(10);
        let overlap = SubsetFamily::new(
            10,
            vec![
                FinitePrefixSet::from_fn(10, |n| n < 6),
                FinitePrefixSet::from_fn(10, |n| n >= 4),
            ],
        )
        .unwrap();
        assert!(matches!(
            partition_density_witness(&b, &overlap, Rational::new(1, 2), 9),
            Err(Error::InvalidPartition(_))
        ));

        let sparse = FinitePrefixSet::from_members(10, [0]).unwrap();
        let parts = SubsetFamily::new(10, vec![sparse.clone()]).unwrap();
        assert!(matches!(
            partition_density_witness(&sparse, &parts, Rational::new(1, 2), 9),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn violation_search_finds_disjoint_families_when_allowed() {
        // Bound 1/8 on [0, 8): pairs must overlap below 1 element, i.e. be
        // disjoint. Two disjoint 4-sets exist, but not four.
        let two = variance_violation_search(8, 4, 2, Rational::new(1, 8), 1 << 22).unwrap();
        assert!(two.is_some());
        let w = two.unwrap();
        assert_eq!(w[0] & w[1], 0);
        let four = variance_violation_search(8, 4, 4, Rational::new(1, 8), 1 << 22).unwrap();
        assert!(four.is_none());
        // Nonpositive bounds are never violated.
        assert!(
            variance_violation_search(8, 2, 4, Rational::new(0, 1), 1 << 22)
                .unwrap()
                .is_none()
        );
    }
}
