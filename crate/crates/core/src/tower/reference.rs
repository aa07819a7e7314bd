//! The successor recursions defining `+` and `·` on the naturals.
//!
//! ```text
//! m + 0     := m          m · 1     := m
//! m + (n+1) := (m+n) + 1  m · (n+1) := m·n + m
//! ```
//!
//! Recursion depth is linear in the second operand, so the recursions are
//! unrolled into loops over the successor. They are correct but slow, and
//! serve as oracles for the positional operations.
//!
//! The set-theoretic encoding of naturals (`0 := ∅`, `1 := {∅}`, ...) is not
//! materialized; `Natural` stands for the class directly.

use super::Natural;

/// `m + n` by applying the successor `n` times to `m`.
pub fn add(m: &Natural, n: &Natural) -> Natural {
    let mut acc = m.clone();
    let mut counter = Natural::zero();
    while &counter != n {
        acc = acc.successor();
        counter = counter.successor();
    }
    acc
}

/// `m · n` by the recursion on `n`, extended with `m · 0 := 0`.
pub fn mul(m: &Natural, n: &Natural) -> Natural {
    if n.is_zero() {
        return Natural::zero();
    }
    let mut acc = m.clone();
    let mut counter = Natural::one();
    while &counter != n {
        acc = add(&acc, m);
        counter = counter.successor();
    }
    acc
}
