//! Shared inputs for the benchmarks.

use reals_core::arithmetic::interval_root;
use reals_core::tower::Rational;
use reals_core::Enclosure;

/// `sqrt(r)` as a fresh enclosure, so nothing is cached between iterations.
pub fn sqrt_of(r: i64) -> Enclosure {
    interval_root(&Enclosure::from_rational(Rational::from(r)), 2).expect("non-negative")
}

/// Rationals with long periods: `1/p` for primes with full-period expansions.
pub fn long_period_rationals() -> Vec<Rational> {
    [7, 17, 97, 983, 9973].iter().map(|&p| Rational::ratio(1, p)).collect()
}

pub const EXPRESSIONS: &[&str] = &[
    "sqrt(2)*sqrt(3) - root(2,6)",
    "1/(1 + sqrt(5)) + 0.1(6)",
    "e * e - 2*e",
];
