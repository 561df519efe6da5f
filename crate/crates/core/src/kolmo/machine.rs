//! The fixed toy oracle machine behind every complexity figure in this crate.
//!
//! A program is a bitstring read as consecutive 3-bit opcodes, most
//! significant bit first:
//!
//! | code | name         | effect                                                       |
//! |------|--------------|--------------------------------------------------------------|
//! | 000  | EMIT0        | append 0 to the output                                       |
//! | 001  | EMIT1        | append 1 to the output                                       |
//! | 010  | HALT         | stop and return the output                                   |
//! | 011  | QUERY-BRANCH | query the oracle at the pointer; the next two 3-bit fields   |
//! |      |              | are raw skip counts: on a 1-bit continue `taken` opcodes     |
//! |      |              | past the operands, on a 0-bit `not-taken` opcodes            |
//! | 100  | INC-POINTER  | advance the oracle pointer by one                            |
//! | 101  | JUMP-BACK    | set the program counter back to the first opcode             |
//! | 110  | NOP          | nothing                                                      |
//! | 111  | RESERVED     | diverge                                                      |
//!
//! The oracle pointer starts at 0. Every executed instruction counts one step
//! against the step budget; every query counts against the query bound and is
//! recorded. Running past the end of the code, landing on a partial opcode,
//! or missing branch operands all diverge. The empty program halts at once
//! with the empty output.
//!
//! The machine is deterministic, and for any target σ the literal program
//! EMIT(σ₀)…EMIT(σₙ₋₁) HALT has 3|σ|+3 bits and runs in |σ|+1 steps, which
//! pins the guarantee C^s(σ) ≤ 3|σ|+3 whenever that fits the budget.

use crate::bits::Bitstring;
use crate::set::FinitePrefixSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToyProgram {
    code: Bitstring,
}

impl ToyProgram {
    pub fn new(code: Bitstring) -> Self {
        ToyProgram { code }
    }

    /// The `len`-bit program whose bits spell `bits` most significant first;
    /// the enumeration helper behind exhaustive complexity search.
    pub fn from_packed(len: u32, bits: u64) -> Self {
        ToyProgram {
            code: Bitstring::from_value_be(bits, len),
        }
    }

    pub fn len_bits(&self) -> u64 {
        self.code.len()
    }

    pub fn code(&self) -> &Bitstring {
        &self.code
    }

    /// Opcode at program counter `pc`, if a full 3-bit field exists there.
    fn opcode_at(&self, pc: u64) -> Option<u8> {
        let base = pc.checked_mul(3)?;
        if base + 3 > self.code.len() {
            return None;
        }
        Some(
            self.code.bit(base).unwrap() << 2
                | self.code.bit(base + 1).unwrap() << 1
                | self.code.bit(base + 2).unwrap(),
        )
    }
}

pub const OP_EMIT0: u8 = 0b000;
pub const OP_EMIT1: u8 = 0b001;
pub const OP_HALT: u8 = 0b010;
pub const OP_QUERY_BRANCH: u8 = 0b011;
pub const OP_INC_POINTER: u8 = 0b100;
pub const OP_JUMP_BACK: u8 = 0b101;
pub const OP_NOP: u8 = 0b110;
pub const OP_RESERVED: u8 = 0b111;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Halted(Bitstring),
    Diverged,
}

impl RunOutcome {
    pub fn output(&self) -> Option<&Bitstring> {
        match self {
            RunOutcome::Halted(out) => Some(out),
            RunOutcome::Diverged => None,
        }
    }
}

/// Execution accounting: steps executed and oracle queries made.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub steps: u64,
    pub queries: u64,
    pub max_query_pos: Option<u64>,
}

/// Runs a program against a finite oracle. Divergence covers budget
/// exhaustion, malformed code, and queries beyond `max_query`. Oracle
/// positions past the window read as 0.
pub fn run_program(
    program: &ToyProgram,
    oracle: &FinitePrefixSet,
    max_steps: u64,
    max_query: u64,
) -> RunOutcome {
    run_program_traced(program, oracle, max_steps, max_query).0
}

pub fn run_program_traced(
    program: &ToyProgram,
    oracle: &FinitePrefixSet,
    max_steps: u64,
    max_query: u64,
) -> (RunOutcome, RunStats) {
    let mut stats = RunStats::default();
    if program.len_bits() == 0 {
        return (RunOutcome::Halted(Bitstring::new()), stats);
    }
    let mut pc: u64 = 0;
    let mut pointer: u64 = 0;
    let mut output = Bitstring::new();
    loop {
        if stats.steps >= max_steps {
            return (RunOutcome::Diverged, stats);
        }
        let Some(op) = program.opcode_at(pc) else {
            return (RunOutcome::Diverged, stats);
        };
        stats.steps += 1;
        match op {
            OP_EMIT0 => {
                output.push(0);
                pc += 1;
            }
            OP_EMIT1 => {
                output.push(1);
                pc += 1;
            }
            OP_HALT => return (RunOutcome::Halted(output), stats),
            OP_QUERY_BRANCH => {
                let (Some(taken), Some(not_taken)) =
                    (program.opcode_at(pc + 1), program.opcode_at(pc + 2))
                else {
                    return (RunOutcome::Diverged, stats);
                };
                stats.queries += 1;
                stats.max_query_pos = Some(stats.max_query_pos.map_or(pointer, |m| m.max(pointer)));
                if pointer > max_query {
                    return (RunOutcome::Diverged, stats);
                }
                let bit = oracle.contains(pointer);
                pc += 3 + if bit { taken as u64 } else { not_taken as u64 };
            }
            OP_INC_POINTER => {
                pointer += 1;
                pc += 1;
            }
            OP_JUMP_BACK => pc = 0,
            OP_NOP => pc += 1,
            _ => return (RunOutcome::Diverged, stats),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn orc(members: &[u64]) -> FinitePrefixSet {
        FinitePrefixSet::from_members(64, members.iter().copied()).unwrap()
    }

    fn prog(s: &str) -> ToyProgram {
        ToyProgram::new(Bitstring::from_str(s).unwrap())
    }

    #[test]
    fn empty_program_halts_with_empty_output() {
        let (out, stats) = run_program_traced(&prog(""), &orc(&[]), 100, 100);
        assert_eq!(out, RunOutcome::Halted(Bitstring::new()));
        assert_eq!(stats.steps, 0);
    }

    #[test]
    fn literal_emission_golden() {
        // EMIT1 EMIT0 HALT → "10" in 3 steps, 9 bits.
        let p = prog("001000010");
        let (out, stats) = run_program_traced(&p, &orc(&[]), 100, 100);
        assert_eq!(out, RunOutcome::Halted("10".parse().unwrap()));
        assert_eq!(stats.steps, 3);
        assert!(stats.steps <= 3 * 2 + 3);
        assert_eq!(stats.queries, 0);
    }

    #[test]
    fn falling_off_the_end_diverges() {
        assert_eq!(run_program(&prog("000"), &orc(&[]), 100, 100), RunOutcome::Diverged);
        // Partial trailing opcode.
        assert_eq!(run_program(&prog("01"), &orc(&[]), 100, 100), RunOutcome::Diverged);
        // RESERVED diverges immediately.
        assert_eq!(run_program(&prog("111"), &orc(&[]), 100, 100), RunOutcome::Diverged);
    }

    #[test]
    fn query_branch_golden() {
        // QUERY-BRANCH with skips (taken=1, not-taken=0); taken path skips
        // one opcode. Taken: EMIT1 HALT; not-taken: EMIT0 EMIT1 HALT.
        // Code: 011 001 000 | 000 001 010
        let p = prog("011001000000001010");
        let with_zero = run_program(&p, &orc(&[1]), 100, 100);
        assert_eq!(with_zero, RunOutcome::Halted("01".parse().unwrap()));
        let with_one = run_program(&p, &orc(&[0]), 100, 100);
        assert_eq!(with_one, RunOutcome::Halted("1".parse().unwrap()));
    }

    #[test]
    fn query_past_bound_diverges() {
        // INC-POINTER ×3 then query with bound 2.
        let p = prog("100100100011000000010");
        let (out, stats) = run_program_traced(&p, &orc(&[0, 1, 2, 3]), 100, 2);
        assert_eq!(out, RunOutcome::Diverged);
        assert_eq!(stats.max_query_pos, Some(3));
    }

    #[test]
    fn jump_back_loops_until_the_step_budget() {
        // NOP JUMP-BACK loops forever.
        let p = prog("110101");
        let (out, stats) = run_program_traced(&p, &orc(&[]), 57, 100);
        assert_eq!(out, RunOutcome::Diverged);
        assert_eq!(stats.steps, 57);
    }

    #[test]
    fn missing_branch_operands_diverge() {
        assert_eq!(run_program(&prog("011"), &orc(&[]), 100, 100), RunOutcome::Diverged);
        assert_eq!(run_program(&prog("011001"), &orc(&[]), 100, 100), RunOutcome::Diverged);
    }

    #[test]
    fn budget_monotonicity_spot_checks() {
        // Any halting run still halts with larger budgets, same output.
        let oracle = orc(&[0, 2, 5]);
        for len in 0..10u32 {
            for bits in 0..(1u64 << len) {
                let p = ToyProgram::from_packed(len, bits);
                if let (RunOutcome::Halted(out), _) = run_program_traced(&p, &oracle, 8, 8) {
                    assert_eq!(
                        run_program(&p, &oracle, 16, 16),
                        RunOutcome::Halted(out.clone())
                    );
                    assert_eq!(run_program(&p, &oracle, 8, 8), RunOutcome::Halted(out));
                }
            }
        }
    }
}
