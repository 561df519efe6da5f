//! The coding constructions: each encoder produces a finite prefix of a set
//! of naturals and each decoder consumes an arbitrary sample of it.

mod dm;
mod evenodd;
mod interval;
mod parity;
mod residue;
mod slowdecay;

pub use dm::{dm_decode, dm_encode};
pub use evenodd::{evenodd_extract, evenodd_split, EvenOddParts};
pub use interval::{interval_decode, interval_encode};
pub use parity::{parity_decode, parity_encode, parity_thresholds};
pub use residue::{padded_prefix, residue_decode, residue_encode, residue_modulus_exponent};
pub use slowdecay::{slowdecay_decode, slowdecay_encode};
