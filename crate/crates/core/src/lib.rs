//! Encoding information into subsets of dense sets of naturals.
//!
//! The crate provides:
//! - exact density arithmetic over finite prefixes of sets of naturals
//!   ([`density`]), with no floating point anywhere in a verdict;
//! - five coding constructions with density guarantees ([`codecs`]): the
//!   initial-segment, interval-redundancy, slow-decay, parity and residue
//!   codecs, plus the even/odd split transform;
//! - a step-budgeted diagonalization against machine tables and its
//!   sample-driven completion decoder ([`diagonal`]);
//! - brute-force verifiers for the finite combinatorial facts those
//!   constructions rely on ([`lemmas`]);
//! - a resource-bounded complexity engine over finite oracles and
//!   finite-universe k-safety checks ([`kolmo`]);
//! - file formats ([`io`]), deterministic samplers ([`sample`]) and the
//!   verification battery behind `verify-all` ([`verify`]).
//!
//! Infinite sets appear only as finite prefixes over an explicit window
//! `[0, horizon)` plus, where an encoder needs it, a membership predicate;
//! every guarantee is checked per-point over the window.

pub mod bits;
pub mod codecs;
pub mod density;
pub mod diagonal;
pub mod error;
pub mod io;
pub mod kolmo;
pub mod lemmas;
pub mod partial;
pub mod sample;
pub mod set;
pub mod thresholds;
pub mod verify;

pub use bits::Bitstring;
pub use density::Rational;
pub use error::{Error, Result};
pub use partial::PartialBitFunction;
pub use set::FinitePrefixSet;
pub use thresholds::{PairEnumeration, Scheme, ThresholdSequence};
