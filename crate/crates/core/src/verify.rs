//! The full verification battery: every guarantee the crate promises, run as
//! an exact check with a wall-clock ceiling. The `acceptance` test target and
//! the CLI `verify-all` subcommand both drive this module.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{string_length_of_index, Bitstring};
use crate::codecs::{
    dm_encode, evenodd_extract, evenodd_split, interval_decode, interval_encode, parity_decode,
    parity_encode, residue_decode, residue_encode, residue_modulus_exponent, slowdecay_decode,
    slowdecay_encode,
};
use crate::density::{density_at, inv_floor_sqrt, is_f_dense, Rational};
use crate::diagonal::{pa_construct, pa_decode, MachineTable};
use crate::error::{Error, Result};
use crate::kolmo::{cheap_strings, k_safe_check, k_safe_density_check, KSafeInstance};
use crate::lemmas::{
    disjoint_dense_bound_check, find_disjoint_dense_family, mass_sum, min_family_size,
    pairwise_overlap_sum, partition_density_witness, variance_pair_witness,
    variance_violation_search, SubsetFamily,
};
use crate::sample::{bernoulli_sample, seeded_subset, stride_sample};
use crate::set::FinitePrefixSet;
use crate::thresholds::{default_interval_thresholds, PairEnumeration};

/// Outcome of one verification check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
    pub detail: String,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} {} ({} ms, limit {} ms): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

fn run_check(
    name: &'static str,
    limit_ms: u128,
    body: impl FnOnce() -> Result<String>,
) -> CheckOutcome {
    let start = Instant::now();
    let result = body();
    let elapsed_ms = start.elapsed().as_millis();
    match result {
        Ok(detail) => CheckOutcome {
            name,
            pass: elapsed_ms <= limit_ms,
            elapsed_ms,
            limit_ms,
            detail: if elapsed_ms <= limit_ms {
                detail
            } else {
                format!("{detail} [time limit exceeded]")
            },
        },
        Err(e) => CheckOutcome {
            name,
            pass: false,
            elapsed_ms,
            limit_ms,
            detail: e.to_string(),
        },
    }
}

fn fail(msg: String) -> Error {
    Error::InvariantViolation(msg)
}

fn random_message(bits: u32, rng: &mut ChaCha8Rng) -> Bitstring {
    let mut x = Bitstring::new();
    for _ in 0..bits {
        x.push(rng.random_range(0..2u8) as u8);
    }
    x
}

/// Initial-segment codec: a window of 2^16 − 1 indices holds exactly n
/// encoded elements below 2^n − 1 for every n ≤ 16.
pub fn check_dm_density(seed: u64) -> CheckOutcome {
    run_check("dm-density", 1_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_message(64, &mut rng);
        let horizon = (1u64 << 16) - 1;
        let a = dm_encode(&x, horizon)?;
        for n in 0..=16u64 {
            let below = ((1u64 << n) - 1).min(horizon);
            let count = a.count_in(0, below);
            if count != n {
                return Err(fail(format!("|A ∩ [0, 2^{n}−1)| = {count}, expected {n}")));
            }
        }
        Ok("element counts below 2^n − 1 equal n for all n ≤ 16".into())
    })
}

/// Interval codec: block densities at the stated points and exact decoding of
/// stride-3 samples over a 10^5 window with source set {0, 2, 5}.
pub fn check_interval_codec(_seed: u64) -> CheckOutcome {
    run_check("interval-codec", 1_000, || {
        let horizon = 100_000u64;
        let source = [0u64, 2, 5];
        let t = default_interval_thresholds(horizon);
        let a = interval_encode(|i| source.contains(&i), &t, horizon)?;
        for &i in &source {
            if i < 2 {
                continue; // bound (i−1)/i imposes nothing for i ∈ {0, 1}
            }
            let (_, hi) = t.interval(i as usize).unwrap();
            let at = hi - 1;
            let bound = Rational::new(i as i64 - 1, i as i64);
            let d = density_at(&a, at)?;
            if d < bound {
                return Err(fail(format!("density {d} < {bound} at {at} for block {i}")));
            }
        }
        for phase in 0..3u64 {
            let sample = stride_sample(&a, 3, phase);
            let decoded = interval_decode(&sample, &t)?;
            // Oracle: indices whose block the sample actually meets.
            let mut expected = std::collections::BTreeSet::new();
            for i in 0..t.interval_count() {
                let (lo, hi) = t.interval(i).unwrap();
                if lo < horizon && sample.count_in(lo, hi.min(horizon)) > 0 {
                    expected.insert(i as u64);
                }
            }
            if decoded != expected {
                return Err(fail(format!("phase {phase}: decoded {decoded:?}")));
            }
            if !decoded.iter().all(|i| source.contains(i)) {
                return Err(fail(format!("phase {phase} decoded beyond the source")));
            }
            for &i in &source {
                let (lo, hi) = t.interval(i as usize).unwrap();
                if a.count_in(lo, hi.min(horizon)) >= 3 && !decoded.contains(&i) {
                    return Err(fail(format!("phase {phase} missed well-hit block {i}")));
                }
            }
        }
        Ok("block densities meet (i−1)/i and stride-3 decoding is exact".into())
    })
}

/// Slow-decay codec: 3 blocks against f(n) = 1/⌊√(n+1)⌋ over 10^5 points
/// stay f-dense everywhere, and one element of the last block recovers the
/// first two message bits.
pub fn check_slowdecay_codec(seed: u64) -> CheckOutcome {
    run_check("slowdecay-codec", 5_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5107);
        let x = random_message(8, &mut rng);
        let horizon = 100_000u64;
        let (a, t) = slowdecay_encode(&x, inv_floor_sqrt, 3, horizon)?;
        if !is_f_dense(&a, inv_floor_sqrt) {
            return Err(fail("set is not f-dense across the window".into()));
        }
        let n1 = t.values[0];
        let n2 = t.values[1];
        let mut checked = 0u64;
        let mut m = a.next_member(n2);
        while let Some(elem) = m {
            let single = FinitePrefixSet::from_members(horizon, [elem])?;
            for i in 0..2u64 {
                let bit = slowdecay_decode(&single, n1, i)?;
                if bit != x.bit(i).unwrap() {
                    return Err(fail(format!("element {elem} decodes bit {i} as {bit}")));
                }
            }
            checked += 1;
            m = a.next_member(elem + 1).filter(|_| checked < 64);
        }
        if checked == 0 {
            return Err(fail("no element in the final block".into()));
        }
        Ok(format!(
            "f-dense over the window; {checked} final-block elements each recover both bits (thresholds {:?})",
            t.values
        ))
    })
}

/// Parity codec: exact density 1/2 at every odd point of a 10^6 window, and
/// both stride-2 phases plus a 1/4 thinning decode every covered message bit.
pub fn check_parity_codec(seed: u64) -> CheckOutcome {
    run_check("parity-codec", 5_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9A17);
        let x = random_message(32, &mut rng);
        let horizon = 1_000_000u64;
        let pairs = PairEnumeration::canonical();
        let (a, t) = parity_encode(&x, &pairs, 64, horizon)?;
        let mut count = 0u64;
        for n in 0..horizon {
            count += a.bit(n) as u64;
            if n % 2 == 1 && 2 * count != n + 1 {
                return Err(fail(format!("density at {n} is {count}/{}", n + 1)));
            }
        }
        let covered: std::collections::BTreeSet<u64> = (0..t.interval_count())
            .map(|i| pairs.decode(i as u64).0)
            .collect();
        let mut samples: Vec<(String, FinitePrefixSet)> = vec![
            ("stride-2 phase 0".into(), stride_sample(&a, 2, 0)),
            ("stride-2 phase 1".into(), stride_sample(&a, 2, 1)),
            (
                "1/4 thinning".into(),
                bernoulli_sample(&a, Rational::new(1, 4), seed ^ 0x714)?,
            ),
        ];
        let mut decoded_total = 0u64;
        for (label, sample) in samples.drain(..) {
            for &j in &covered {
                match parity_decode(&sample, j, &pairs, &t) {
                    Ok(bit) => {
                        decoded_total += 1;
                        if bit != x.bit(j).unwrap() {
                            return Err(fail(format!("{label}: bit {j} decoded as {bit}")));
                        }
                    }
                    Err(e) => return Err(fail(format!("{label}: bit {j}: {e}"))),
                }
            }
        }
        Ok(format!(
            "density exactly 1/2 at every odd point; {decoded_total} decodes over {} covered bits all match",
            covered.len()
        ))
    })
}

/// Residue codec: exact tail density 2^{−m} at aligned points and uniform
/// decoding of every element.
pub fn check_residue_codec(_seed: u64) -> CheckOutcome {
    run_check("residue-codec", 1_000, || {
        let rho: Bitstring = "101".parse().unwrap();
        let delta = Rational::new(1, 8);
        let start = 16u64;
        let horizon = 1u64 << 16;
        let m = residue_modulus_exponent(delta)?;
        if m != 3 {
            return Err(fail(format!("modulus exponent {m}, expected 3")));
        }
        let a = residue_encode(&rho, start, delta, horizon)?;
        let mut aligned = 0u64;
        let mut n = start * 8 - 1 + 8; // first point ≡ −1 (mod 8) at or past N·8
        while n < horizon {
            if 8 * a.count_in(start, n + 1) != n + 1 - start {
                return Err(fail(format!("tail density not exactly 1/8 at {n}")));
            }
            aligned += 1;
            n += 8;
        }
        for elem in a.iter() {
            let (bits, witness) = residue_decode(elem, start, m)?;
            if bits.to_string() != "101" || witness != elem {
                return Err(fail(format!("element {elem} decoded {bits}")));
            }
        }
        Ok(format!(
            "exact 1/8 tail density at {aligned} aligned points; all {} elements decode the key",
            a.count()
        ))
    })
}

/// Even/odd split: exactly one of each pair, and every thinned subsample
/// separates cleanly into a subset and a co-subset with an agreeing partial
/// function.
pub fn check_evenodd_split(seed: u64) -> CheckOutcome {
    run_check("evenodd-split", 1_000, || {
        let horizon = 1u64 << 10;
        for trial in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial << 8));
            let a = FinitePrefixSet::from_fn(horizon, |_| rng.random_range(0..2) == 1);
            let b = evenodd_split(&a);
            for n in 0..horizon {
                if b.bit(2 * n) + b.bit(2 * n + 1) != 1 {
                    return Err(fail(format!("trial {trial}: pair at {n} broken")));
                }
            }
            let thinned = [
                stride_sample(&b, 3, trial % 3),
                bernoulli_sample(&b, Rational::new(1, 2), seed ^ trial)?,
            ];
            for c in &thinned {
                let parts = evenodd_extract(c)?;
                if !parts.even.is_subset_of(&a) {
                    return Err(fail(format!("trial {trial}: even part escapes the set")));
                }
                if !parts.odd.is_disjoint_from(&a) {
                    return Err(fail(format!("trial {trial}: odd part meets the set")));
                }
                if !parts.partial.agrees_with_set(&a) {
                    return Err(fail(format!("trial {trial}: partial function disagrees")));
                }
                if parts.even.count() + parts.odd.count() != c.count() {
                    return Err(fail(format!("trial {trial}: counts do not add up")));
                }
            }
        }
        Ok("100 random sets: pair property exact, all extractions consistent".into())
    })
}

/// The fixed eight-machine table used by the diagonalization check.
pub fn fixed_diagonal_table() -> MachineTable {
    MachineTable::new(
        4_000,
        [
            (0u32, 0u64, 1u8, 2u64),
            (1, 5, 0, 9),
            (2, 11, 1, 30),
            (4, 47, 0, 150),
            (6, 191, 1, 900),
            (7, 1151, 0, 3800),
        ],
    )
    .expect("fixed table is well-formed")
}

/// Diagonal construction: density ≥ 1/4 from n = 3 over 2^12 string indices,
/// and decoded completions agree with the partial function on every decodable
/// domain point across 100 seeded samples.
pub fn check_pa_construction(seed: u64) -> CheckOutcome {
    run_check("pa-construction", 10_000, || {
        let table = fixed_diagonal_table();
        let horizon = 1u64 << 12;
        let cons = pa_construct(&table, 8, horizon)?;
        let mut count = 0u64;
        for n in 0..horizon {
            count += cons.set.bit(n) as u64;
            if n >= 3 && 4 * count < n + 1 {
                return Err(fail(format!("density below 1/4 at {n}")));
            }
        }
        let max_len = string_length_of_index(horizon - 1);
        let decodable: Vec<(u64, u8)> = cons
            .partial
            .iter()
            .filter(|(x, _)| *x < max_len)
            .collect();
        if decodable.len() < 2 {
            return Err(fail("window leaves fewer than 2 decodable anchors".into()));
        }
        let mut decodes = 0u64;
        for s in 0..100u64 {
            let sample = bernoulli_sample(&cons.set, Rational::new(1, 2), seed ^ (s + 1))?;
            for &(x, fx) in &decodable {
                match pa_decode(&sample, &table, x) {
                    Ok(g) => {
                        decodes += 1;
                        if g != fx {
                            return Err(fail(format!("sample {s}: g({x}) = {g} ≠ {fx}")));
                        }
                        // Converging anchors must decode the flipped output.
                        let i = cons.anchors.iter().position(|a| *a == x).unwrap() as u32;
                        let (out, _) = table.converges(i, x).unwrap();
                        if g != 1 - out {
                            return Err(fail(format!("anchor {x}: g = {g}, machine output {out}")));
                        }
                    }
                    Err(Error::InsufficientSample(_)) if x + 1 == max_len => {
                        // The lone longest string may be thinned away.
                    }
                    Err(e) => return Err(fail(format!("sample {s}, x = {x}: {e}"))),
                }
            }
        }
        Ok(format!(
            "density ≥ 1/4 from n = 3 through {}; {decodes} decodes across 100 samples all complete the partial function",
            horizon - 1
        ))
    })
}

/// Pairwise-overlap lemma: exhaustive over n ≤ 8 and k ≤ 4 for δ ∈ {1/2, 1/4}
/// via counterexample search, plus 10^5 randomized trials per δ at n = 64.
pub fn check_variance_lemma(seed: u64) -> CheckOutcome {
    run_check("variance-lemma", 60_000, || {
        let deltas = [Rational::new(1, 2), Rational::new(1, 4)];
        for delta in deltas {
            let family_floor = min_family_size(delta)?;
            for n in 1..=8u64 {
                // |A| ≥ δn as an integer floor.
                let min_size = ((*delta.numer() as u64 * n).div_ceil(*delta.denom() as u64)) as u32;
                for k in 2..=4usize {
                    let mut bound = delta * delta - delta / Rational::new(k as i64, 1);
                    if k as u64 >= family_floor {
                        bound = bound.max(delta * delta / 2);
                    }
                    if let Some(masks) =
                        variance_violation_search(n, min_size, k, bound, 1 << 24)?
                    {
                        return Err(fail(format!(
                            "violating family at n = {n}, k = {k}, δ = {delta}: {masks:?}"
                        )));
                    }
                }
            }
        }

        // Randomized stress at n = 64 with k = ⌈2/δ⌉ members of size ⌈δn⌉.
        let n = 64u64;
        for delta in deltas {
            let k = min_family_size(delta)? as usize;
            let size = ((*delta.numer() as u64 * n).div_ceil(*delta.denom() as u64)) as usize;
            let floor_half = delta * delta / 2;
            let floor_k = delta * delta - delta / Rational::new(k as i64, 1);
            for trial in 0..100_000u64 {
                let members: Vec<FinitePrefixSet> = (0..k as u64)
                    .map(|i| {
                        seeded_subset(n, size, seed ^ (0x7A21AD + trial * 16 + i))
                    })
                    .collect::<Result<_>>()?;
                let fam = SubsetFamily::new(n, members)?;
                let w = variance_pair_witness(&fam)?;
                if w.ratio < floor_half || w.ratio < floor_k {
                    return Err(fail(format!(
                        "trial {trial} at δ = {delta}: witness ratio {} below the floor",
                        w.ratio
                    )));
                }
                if trial % 10_000 == 0 {
                    // Exact variance identity on a subsample.
                    let y = mass_sum(&fam)?;
                    let s = pairwise_overlap_sum(&fam)?;
                    if s < y * y - y {
                        return Err(fail(format!("overlap sum identity broken at {trial}")));
                    }
                    let kk = Rational::new((k * k) as i64, 1);
                    if w.ratio < (y * y - y) / kk {
                        return Err(fail(format!("witness below the identity floor at {trial}")));
                    }
                }
            }
        }
        Ok("no violation exhaustively (n ≤ 8, k ≤ 4) nor in 2×10^5 randomized trials at n = 64".into())
    })
}

/// Disjoint-dense cap: exhaustively, no family of more than 2/δ pairwise
/// disjoint δ/2-dense-at-n sets exists for n ≤ 12 and δ ∈ {1/2, 1}.
pub fn check_disjoint_dense_bound(_seed: u64) -> CheckOutcome {
    run_check("disjoint-dense-bound", 10_000, || {
        for delta in [Rational::new(1, 2), Rational::new(1, 1)] {
            let cap = (2 * *delta.denom() / *delta.numer()) as u64;
            for n in 0..=12u64 {
                if let Some(fam) =
                    find_disjoint_dense_family(n, delta, cap + 1, 1 << 24)?
                {
                    return Err(fail(format!(
                        "{} disjoint sets at n = {n}, δ = {delta}: {fam:?}",
                        cap + 1
                    )));
                }
            }
        }
        // Positive control at the stated instance: three disjoint 3-element
        // subsets of [0, 10) pass the verdict.
        let members = vec![
            FinitePrefixSet::from_members(10, [0, 1, 2])?,
            FinitePrefixSet::from_members(10, [3, 4, 5])?,
            FinitePrefixSet::from_members(10, [6, 7, 8])?,
        ];
        let fam = SubsetFamily::new(10, members)?;
        if !disjoint_dense_bound_check(&fam, Rational::new(1, 2), 9)? {
            return Err(fail("witness family rejected".into()));
        }
        Ok("no oversized family exists for n ≤ 12, δ ∈ {1/2, 1}; witness family verified".into())
    })
}

/// Partition pigeonhole: for every set B over [0, n] and every partition into
/// k ≤ 3 parts, n ≤ 12, the witness op succeeds at B's exact density.
pub fn check_partition_pigeonhole(_seed: u64) -> CheckOutcome {
    run_check("partition-pigeonhole", 10_000, || {
        let mut leaves = 0u64;
        for n in 0..=12u64 {
            for k in 1..=3usize {
                pigeonhole_sweep(n, k, &mut leaves)?;
            }
        }
        Ok(format!("witness found for all {leaves} (set, partition) pairs"))
    })
}

/// One cell of the pigeonhole sweep, for the CLI: every (set, partition into
/// k parts) pair over [0, n]. Returns the number of pairs checked.
pub fn check_partition_pigeonhole_cell(n: u64, k: usize) -> Result<u64> {
    let mut leaves = 0u64;
    pigeonhole_sweep(n, k, &mut leaves)?;
    Ok(leaves)
}

fn pigeonhole_sweep(n: u64, k: usize, leaves: &mut u64) -> Result<()> {
    let horizon = n + 1;
    let mut b = FinitePrefixSet::empty(horizon);
    let mut parts = SubsetFamily::new(
        horizon,
        vec![FinitePrefixSet::empty(horizon); k],
    )?;

    fn rec(
        elem: u64,
        n: u64,
        k: usize,
        b: &mut FinitePrefixSet,
        parts: &mut SubsetFamily,
        leaves: &mut u64,
    ) -> Result<()> {
        if elem > n {
            *leaves += 1;
            let total = b.count();
            // Independent pigeonhole oracle on raw counts.
            let max_part = parts.members().iter().map(|p| p.count()).max().unwrap();
            if max_part * (k as u64) < total {
                return Err(fail(format!("pigeonhole itself fails: {max_part}·{k} < {total}")));
            }
            let delta = Rational::new_raw(total as i64, n as i64 + 1);
            let idx = partition_density_witness(b, parts, delta, n)?;
            let got = parts.members()[idx].count_through(n);
            if got * (k as u64) < total {
                return Err(fail(format!("witness part {idx} too small: {got}")));
            }
            return Ok(());
        }
        // Leave elem out of B…
        rec(elem + 1, n, k, b, parts, leaves)?;
        // …or put it in B inside each part in turn.
        for p in 0..k {
            b.insert(elem);
            parts.members_mut()[p].insert(elem);
            rec(elem + 1, n, k, b, parts, leaves)?;
            parts.members_mut()[p].remove(elem);
            b.remove(elem);
        }
        Ok(())
    }

    rec(0, n, k, &mut b, &mut parts, leaves)
}

/// Counting bound: over every nonempty oracle s ⊆ [0, 12] and k ≤ 6, fewer
/// than 2^k strings have complexity < k.
pub fn check_kolmo_counting(_seed: u64) -> CheckOutcome {
    run_check("kolmo-counting-bound", 60_000, || {
        let mut oracles = 0u64;
        for mask in 1u64..1 << 13 {
            let s = FinitePrefixSet::from_members(13, (0..13).filter(|e| mask >> e & 1 == 1))?;
            let cheap = cheap_strings(&s, 6)?;
            for k in 1..=6u32 {
                let count = cheap.values().filter(|c| **c < k as u64).count() as u64;
                if count >= 1 << k {
                    return Err(fail(format!(
                        "{count} strings of complexity < {k} for oracle mask {mask:#x}"
                    )));
                }
            }
            oracles += 1;
        }
        Ok(format!("bound holds for all {oracles} oracles and k ≤ 6"))
    })
}

/// k-safety size bounds on tiny universes: an oversized family always fails,
/// the empty family always passes, and an unreachable subset floor is vacuous.
pub fn check_ksafe_bounds(_seed: u64) -> CheckOutcome {
    run_check("ksafe-size-bounds", 60_000, || {
        let universe = 12u64;
        let pieces: Vec<FinitePrefixSet> = (0..3)
            .map(|r| FinitePrefixSet::from_fn(universe, |x| x % 3 == r))
            .collect();
        for k in 1..=3u32 {
            let oversized: Vec<Bitstring> = (0..(1u64 << k) + 1)
                .map(crate::bits::string_of_index)
                .collect();
            let inst = KSafeInstance {
                strings: oversized,
                pieces: pieces.clone(),
                m: 2,
                k,
            };
            let v = k_safe_check(&inst, None)?;
            if v.holds {
                return Err(fail(format!("family of 2^{k}+1 strings accepted at k = {k}")));
            }

            let empty = KSafeInstance {
                strings: vec![],
                pieces: pieces.clone(),
                m: 0,
                k,
            };
            let v = k_safe_check(&empty, None)?;
            if !v.holds {
                return Err(fail(format!("empty family rejected at k = {k}")));
            }
        }

        // m beyond the universe quantifies over nothing.
        let vacuous = KSafeInstance {
            strings: (0..40).map(crate::bits::string_of_index).collect(),
            pieces: pieces.clone(),
            m: universe + 1,
            k: 1,
        };
        if !k_safe_check(&vacuous, None)?.holds {
            return Err(fail("unreachable floor not treated as vacuous".into()));
        }

        // Density form: 2^k/δ is the cap. Nine strings on full pieces at
        // δ = 1, k = 3 must fail; a single string passes.
        let nine = KSafeInstance {
            strings: (0..9).map(crate::bits::string_of_index).collect(),
            pieces: vec![FinitePrefixSet::full(6); 9],
            m: 1,
            k: 3,
        };
        if k_safe_density_check(&nine, Rational::new(1, 1), None)?.holds {
            return Err(fail("oversized family accepted in density form".into()));
        }
        let single = KSafeInstance {
            strings: vec![Bitstring::new()],
            pieces: vec![FinitePrefixSet::full(6)],
            m: 1,
            k: 3,
        };
        if !k_safe_density_check(&single, Rational::new(1, 1), None)?.holds {
            return Err(fail("singleton family rejected in density form".into()));
        }
        Ok("oversized families fail, empty families pass, unreachable floors are vacuous".into())
    })
}

/// Runs the whole battery in a fixed order.
pub fn all_checks(seed: u64) -> Vec<CheckOutcome> {
    vec![
        check_dm_density(seed),
        check_interval_codec(seed),
        check_slowdecay_codec(seed),
        check_parity_codec(seed),
        check_residue_codec(seed),
        check_evenodd_split(seed),
        check_pa_construction(seed),
        check_variance_lemma(seed),
        check_disjoint_dense_bound(seed),
        check_partition_pigeonhole(seed),
        check_kolmo_counting(seed),
        check_ksafe_bounds(seed),
    ]
}
