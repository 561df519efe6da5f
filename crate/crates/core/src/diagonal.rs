//! Step-budgeted diagonalization against a table of machines, and the decoder
//! that completes the resulting partial function from any sample.
//!
//! Machines are supplied as explicit lookup tables with convergence stages
//! rather than executed programs: the construction's content is the diagonal
//! bookkeeping, and table form keeps the halting information explicit. The
//! encoded set lives over string indices under the length-then-lex bijection.

use std::collections::BTreeMap;

use crate::bits::{string_bit_of_index, string_length_of_index};
use crate::error::{Error, Result};
use crate::partial::PartialBitFunction;
use crate::sample::bernoulli_sample;
use crate::set::FinitePrefixSet;

/// π(x) = the 2-adic valuation of x + 1. Every fiber is infinite: the fiber
/// of v meets every window of length 2^{v+1}.
pub fn fiber(x: u64) -> u32 {
    (x + 1).trailing_zeros()
}

/// Least x > after with fiber(x) = v, i.e. x ≡ 2^v − 1 (mod 2^{v+1}).
pub fn next_in_fiber(after: u64, v: u32) -> u64 {
    let base = (1u64 << v) - 1;
    let period = 1u64 << (v + 1);
    if after < base {
        base
    } else {
        base + period * ((after - base) / period + 1)
    }
}

/// A finite stepped machine table: machine i on a recorded input converges to
/// an output bit at a recorded stage; any unrecorded pair diverges. Every
/// stage is bounded by a global step budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineTable {
    budget: u64,
    entries: BTreeMap<(u32, u64), (u8, u64)>,
}

impl MachineTable {
    /// Entries are (machine, input, output, stage).
    pub fn new(budget: u64, entries: impl IntoIterator<Item = (u32, u64, u8, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (machine, input, output, stage) in entries {
            if output > 1 {
                return Err(Error::Parameter(format!(
                    "machine {machine} on {input}: output {output} out of range"
                )));
            }
            if stage > budget {
                return Err(Error::Parameter(format!(
                    "machine {machine} on {input}: stage {stage} exceeds the budget {budget}"
                )));
            }
            if map.insert((machine, input), (output, stage)).is_some() {
                return Err(Error::Parameter(format!(
                    "duplicate entry for machine {machine} on input {input}"
                )));
            }
        }
        Ok(MachineTable {
            budget,
            entries: map,
        })
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Unbounded convergence: the recorded (output, stage), if any.
    pub fn converges(&self, machine: u32, input: u64) -> Option<(u8, u64)> {
        self.entries.get(&(machine, input)).copied()
    }

    /// Stage-bounded convergence: the output if the recorded stage is ≤ steps.
    pub fn converges_within(&self, machine: u32, input: u64, steps: u64) -> Option<u8> {
        self.converges(machine, input)
            .filter(|(_, stage)| *stage <= steps)
            .map(|(out, _)| out)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u64, u8, u64)> + '_ {
        self.entries
            .iter()
            .map(|((m, x), (o, s))| (*m, *x, *o, *s))
    }
}

/// Result of the diagonal construction: the partial function, the anchor
/// points x_0 < x_1 < …, and the encoded set over string indices.
#[derive(Clone, Debug)]
pub struct DiagonalConstruction {
    pub partial: PartialBitFunction,
    pub anchors: Vec<u64>,
    pub set: FinitePrefixSet,
}

/// Runs the construction against machines 0..machines over a window of
/// `horizon` string indices.
///
/// Anchors: x_0 = 0; if machine i converges on x_i at stage s_i, the partial
/// function gets 1 − output there and x_{i+1} is the least point past s_i in
/// fiber i+1; otherwise x_{i+1} is the least point past x_i in fiber i+1.
/// A string index belongs to the set unless some machine i converges on x_i,
/// has not yet converged within |σ| steps, σ is long enough to read position
/// x_i, and σ(x_i) differs from the assigned value; strings too short to read
/// x_i are unconstrained.
pub fn pa_construct(
    table: &MachineTable,
    machines: u32,
    horizon: u64,
) -> Result<DiagonalConstruction> {
    let mut partial = PartialBitFunction::new();
    let mut anchors = Vec::with_capacity(machines as usize);
    // Constraints (x_i, stage, required bit) from converging machines.
    let mut constraints: Vec<(u64, u64, u8)> = Vec::new();

    let mut x = 0u64;
    for i in 0..machines {
        debug_assert_eq!(fiber(x), i);
        if x >= horizon {
            return Err(Error::Horizon(format!(
                "anchor x_{i} = {x} does not fit in a window of {horizon} indices"
            )));
        }
        anchors.push(x);
        match table.converges(i, x) {
            Some((out, stage)) => {
                let bit = 1 - out;
                partial.define(x, bit)?;
                constraints.push((x, stage, bit));
                x = next_in_fiber(stage, i + 1);
            }
            None => {
                x = next_in_fiber(x, i + 1);
            }
        }
    }

    // At most one constraint may block any given string length; two blockers
    // i < j at length n would need x_j < n < s_i against x_j > s_i.
    let max_len = if horizon == 0 {
        0
    } else {
        string_length_of_index(horizon - 1)
    };
    for len in 1..=max_len {
        let blocking: Vec<u64> = constraints
            .iter()
            .filter(|(x, stage, _)| *x < len && *stage > len)
            .map(|(x, _, _)| *x)
            .collect();
        if blocking.len() > 1 {
            return Err(Error::InvariantViolation(format!(
                "{} constraints (anchors {:?}) block strings of length {len}",
                blocking.len(),
                blocking
            )));
        }
    }

    let set = FinitePrefixSet::from_fn(horizon, |idx| {
        let len = string_length_of_index(idx);
        constraints.iter().all(|&(x, stage, bit)| {
            stage <= len || x >= len || string_bit_of_index(idx, x) == bit
        })
    });

    Ok(DiagonalConstruction {
        partial,
        anchors,
        set,
    })
}

/// Completes the constructed partial function at `x` from any sample of the
/// encoded set: take the first sampled string σ (in index order) long enough
/// to read position x; if machine π(x) converges on x within |σ| steps answer
/// 1 − its output, otherwise answer σ(x).
pub fn pa_decode(sample: &FinitePrefixSet, table: &MachineTable, x: u64) -> Result<u8> {
    let mut idx = sample.next_member(0);
    while let Some(n) = idx {
        let len = string_length_of_index(n);
        if len > x {
            return Ok(match table.converges_within(fiber(x), x, len) {
                Some(out) => 1 - out,
                None => string_bit_of_index(n, x),
            });
        }
        idx = sample.next_member(n + 1);
    }
    Err(Error::InsufficientSample(format!(
        "no sampled string is longer than {x}"
    )))
}

/// One line of a verification report.
#[derive(Clone, Debug)]
pub struct ReportItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Batch checker for a finished construction: per-window density ≥ 1/4 from
/// n = 3 on, decoded completions agree with the partial function on every
/// decodable point of its domain, and anchors of converging machines decode
/// to the flipped output.
pub fn pa_verify(
    cons: &DiagonalConstruction,
    table: &MachineTable,
    samples: u64,
    seed: u64,
) -> Result<Vec<ReportItem>> {
    let mut report = Vec::new();

    let mut count = 0u64;
    let mut density_failure = None;
    for n in 0..cons.set.horizon() {
        count += cons.set.bit(n) as u64;
        if n >= 3 && 4 * count < n + 1 {
            density_failure = Some(n);
            break;
        }
    }
    report.push(ReportItem {
        name: "density ≥ 1/4 from n = 3".into(),
        pass: density_failure.is_none(),
        detail: match density_failure {
            Some(n) => format!("fails at n = {n}"),
            None => format!("holds through {}", cons.set.horizon().saturating_sub(1)),
        },
    });

    let max_len = if cons.set.horizon() == 0 {
        0
    } else {
        string_length_of_index(cons.set.horizon() - 1)
    };
    let mut completion_failures = Vec::new();
    let mut anchor_failures = Vec::new();
    let mut decodable_points = 0u64;
    for s in 0..samples {
        let sample = bernoulli_sample(&cons.set, crate::density::Rational::new(1, 2), seed + s)?;
        for (x, fx) in cons.partial.iter() {
            if x >= max_len {
                continue; // no in-window string can read this point
            }
            match pa_decode(&sample, table, x) {
                Ok(g) => {
                    decodable_points += 1;
                    if g != fx {
                        completion_failures.push(format!("sample {s}: g({x}) = {g} ≠ {fx}"));
                    }
                }
                Err(Error::InsufficientSample(_)) => {}
                Err(e) => return Err(e),
            }
        }
        for (i, &x) in cons.anchors.iter().enumerate() {
            let Some((out, _)) = table.converges(i as u32, x) else {
                continue;
            };
            if x >= max_len {
                continue;
            }
            match pa_decode(&sample, table, x) {
                Ok(g) => {
                    if g != 1 - out {
                        anchor_failures.push(format!("sample {s}: g(x_{i}) = {g} ≠ {}", 1 - out));
                    }
                }
                Err(Error::InsufficientSample(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    report.push(ReportItem {
        name: "decoded completions extend the partial function".into(),
        pass: completion_failures.is_empty(),
        detail: if completion_failures.is_empty() {
            format!("{decodable_points} decodable domain points across {samples} samples")
        } else {
            completion_failures.join("; ")
        },
    });
    report.push(ReportItem {
        name: "anchors decode to the flipped outputs".into(),
        pass: anchor_failures.is_empty(),
        detail: if anchor_failures.is_empty() {
            "all converging anchors agree".into()
        } else {
            anchor_failures.join("; ")
        },
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fiber_counts_are_exact() {
        // Fiber of v has exactly t elements in any window [0, 2^{v+1}·t).
        for v in 0..5u32 {
            for t in 1..20u64 {
                let window = (1u64 << (v + 1)) * t;
                let count = (0..window).filter(|x| fiber(*x) == v).count() as u64;
                assert_eq!(count, t, "v = {v}, t = {t}");
            }
        }
    }

    #[test]
    fn next_in_fiber_is_least() {
        for v in 0..6u32 {
            for after in 0..200u64 {
                let got = next_in_fiber(after, v);
                let expect = (after + 1..).find(|x| fiber(*x) == v).unwrap();
                assert_eq!(got, expect, "after {after} in fiber {v}");
            }
        }
    }

    #[test]
    fn converging_machine_pins_stated_anchor() {
        let table = MachineTable::new(100, [(0u32, 0u64, 1u8, 5u64)]).unwrap();
        let cons = pa_construct(&table, 2, 1 << 10).unwrap();
        assert_eq!(cons.partial.get(0), Some(0));
        assert_eq!(cons.anchors, vec![0, 9]);
    }

    #[test]
    fn divergent_machine_pins_stated_anchor() {
        let table = MachineTable::new(100, []).unwrap();
        let cons = pa_construct(&table, 2, 1 << 10).unwrap();
        assert!(cons.partial.get(0).is_none());
        assert_eq!(cons.anchors, vec![0, 1]);
    }

    #[test]
    fn no_machines_means_every_string_survives() {
        let table = MachineTable::new(10, []).unwrap();
        let cons = pa_construct(&table, 0, 512).unwrap();
        assert_eq!(cons.set.count(), 512);
    }

    #[test]
    fn membership_matches_direct_evaluation() {
        let table = MachineTable::new(100, [(0, 0, 1, 5)]).unwrap();
        let cons = pa_construct(&table, 1, 128).unwrap();
        // Machine 0 blocks lengths 1..4: strings there must have bit 0 = 0.
        for idx in 0..128u64 {
            let len = string_length_of_index(idx);
            let expect = if (1..5).contains(&len) {
                string_bit_of_index(idx, 0) == 0
            } else {
                true
            };
            assert_eq!(cons.set.contains(idx), expect, "index {idx}");
        }
    }

    #[test]
    fn density_holds_for_a_binding_table() {
        let table = MachineTable::new(4000, [(0, 0, 1, 64)]).unwrap();
        let cons = pa_construct(&table, 1, 1 << 11).unwrap();
        let mut count = 0u64;
        for n in 0..cons.set.horizon() {
            count += cons.set.bit(n) as u64;
            if n >= 3 {
                assert!(4 * count >= n + 1, "density below 1/4 at {n}");
            }
        }
    }

    #[test]
    fn decode_completes_the_partial_function() {
        let table = MachineTable::new(100, [(0, 0, 1, 5), (2, 11, 0, 30)]).unwrap();
        let cons = pa_construct(&table, 3, 1 << 12).unwrap();
        // Take every other element; plenty of long strings survive.
        let sample = crate::sample::stride_sample(&cons.set, 2, 1);
        for (x, fx) in cons.partial.iter() {
            if x < 10 {
                assert_eq!(pa_decode(&sample, &table, x).unwrap(), fx, "g({x})");
            }
        }
        // Unconstrained points decode to something without error.
        assert!(pa_decode(&sample, &table, 3).is_ok());
    }

    #[test]
    fn short_samples_are_insufficient() {
        let table = MachineTable::new(100, []).unwrap();
        // Indices 0..3 name strings of length ≤ 1.
        let sample = FinitePrefixSet::from_members(16, [0, 1, 2]).unwrap();
        assert!(matches!(
            pa_decode(&sample, &table, 1),
            Err(Error::InsufficientSample(_))
        ));
    }

    #[test]
    fn table_validation() {
        assert!(MachineTable::new(10, [(0, 0, 2, 5)]).is_err());
        assert!(MachineTable::new(10, [(0, 0, 1, 11)]).is_err());
        assert!(MachineTable::new(10, [(0, 0, 1, 5), (0, 0, 0, 6)]).is_err());
    }

    #[test]
    fn anchor_beyond_window_is_a_horizon_error() {
        // Machine 0 converges at a huge stage, pushing x_1 past the window.
        let table = MachineTable::new(1 << 20, [(0, 0, 1, 1 << 18)]).unwrap();
        assert!(matches!(
            pa_construct(&table, 2, 1 << 10),
            Err(Error::Horizon(_))
        ));
    }
}
