//! Exact real arithmetic on decimal expansions.
//!
//! Numbers are built bottom-up: naturals, integers as pairs, rationals as
//! pairs of integers, then non-negative reals as decimal expansions. Values
//! whose digits are known come as digit streams; computed values come as
//! nested rational intervals. Suprema are found digit by digit from
//! upper-bound oracles.

pub mod arithmetic;
pub mod error;
pub mod expr;
pub mod gallery;
pub mod magnitudes;
pub mod real;
pub mod sup;
pub mod tower;

pub use error::{RealError, Result};
pub use real::{
    compare_at, digits_from_enclosure, signed_digits, Comparison, DecimalExpansion, DigitReadout,
    Enclosure, Interval, SignNotation, SignedReal, DEFAULT_CAP,
};
pub use sup::{measure, named_oracle, supremum, BoundOracle, CutOracle, SupremumResult};
pub use tower::{Natural, PeriodicDecimal, Rational};
