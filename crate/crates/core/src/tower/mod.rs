//! The number tower: naturals, integers as classes of natural pairs,
//! rationals as classes of integer pairs, and the correspondence between
//! rationals and periodic decimal expansions.
//!
//! The usual cross-multiplication formulas are used for rational addition,
//! multiplication and order.

mod integer;
mod natural;
mod periodic;
mod rational;
pub mod reference;

pub use integer::{int_add, int_mul, IntegerPair};
pub use natural::{nat_add, nat_mul, Natural};
pub use periodic::{periodic_to_rat, rat_to_periodic, PeriodicDecimal};
pub use rational::{
    archimedean_witness, pairs_equivalent, pow10, rat_add, rat_compare, rat_div, rat_mul,
    Rational,
};
