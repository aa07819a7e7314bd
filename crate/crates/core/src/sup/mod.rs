//! Suprema of bounded sets from upper-bound oracles, digit by digit, and
//! the measurement map over cut oracles.
//!
//! The engine never asks whether a point is the supremum itself, so it
//! cannot tell an attained bound from an approached one. The only visible
//! difference is a run of nines, which [`SupremumResult::readout`] reports.

mod engine;
mod named;
mod oracle;

pub use engine::{
    approach_sequence, measure, measure_digits, supremum, NinesTail, SupReadout, SupremumResult,
    UNBOUNDED_LIMIT,
};
pub use named::{e_oracle, named_cut, named_oracle, ORACLE_PATTERNS};
pub use oracle::{
    at_least_oracle, bound_oracle, cut_oracle, nth_root_oracle, BoundOracle, CutOracle, FnOracle,
    InducedBound,
};
