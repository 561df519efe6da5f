//! The acceptance suite: one test per verification criterion, each printing a
//! pass/fail line with its runtime against the stated ceiling.
//!
//! Run with `cargo test -p subsetcodec --test acceptance -- --nocapture` to
//! see every line.

use subsetcodec::verify::{self, CheckOutcome};

fn assert_outcome(outcome: CheckOutcome) {
    println!("{}", outcome.line());
    assert!(outcome.pass, "{}", outcome.line());
}

#[test]
fn dm_density() {
    assert_outcome(verify::check_dm_density(0));
}

#[test]
fn interval_codec() {
    assert_outcome(verify::check_interval_codec(0));
}

#[test]
fn slowdecay_codec() {
    assert_outcome(verify::check_slowdecay_codec(0));
}

#[test]
fn parity_codec() {
    assert_outcome(verify::check_parity_codec(0));
}

#[test]
fn residue_codec() {
    assert_outcome(verify::check_residue_codec(0));
}

#[test]
fn evenodd_split() {
    assert_outcome(verify::check_evenodd_split(0));
}

#[test]
fn pa_construction() {
    assert_outcome(verify::check_pa_construction(0));
}

#[test]
fn variance_lemma() {
    assert_outcome(verify::check_variance_lemma(0));
}

#[test]
fn disjoint_dense_bound() {
    assert_outcome(verify::check_disjoint_dense_bound(0));
}

#[test]
fn partition_pigeonhole() {
    assert_outcome(verify::check_partition_pigeonhole(0));
}

#[test]
fn kolmo_counting_bound() {
    assert_outcome(verify::check_kolmo_counting(0));
}

#[test]
fn ksafe_size_bounds() {
    assert_outcome(verify::check_ksafe_bounds(0));
}
