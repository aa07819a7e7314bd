//! Carriers for non-negative reals and computed values.
//!
//! Two carriers: [`DecimalExpansion`], exact digit streams whose digits are
//! known (periodic, or produced by an oracle), and [`Enclosure`], nested
//! rational intervals for computed values whose digits may sit on a grid
//! boundary. Exact streams exclude tails of nines. Equality of computed reals
//! is never decided; only [`compare_at`] with an explicit precision exists.

mod digits;
mod enclosure;
mod expansion;
mod interval;
mod signed;

pub use digits::{
    digits_from_enclosure, rational_digits, signed_digits, DigitReadout, SignNotation,
    DEFAULT_CAP, GUARD_DIGITS,
};
pub use enclosure::{compare_at, compare_up_to, Comparison, Enclosure};
pub use expansion::{truncate, DecimalExpansion, DigitGenerator};
pub use interval::Interval;
pub use signed::SignedReal;

use crate::error::Result;
use crate::tower::{PeriodicDecimal, Rational};

/// Exact digit stream of a non-negative periodic decimal.
pub fn from_periodic(d: &PeriodicDecimal) -> Result<DecimalExpansion> {
    DecimalExpansion::from_periodic(d)
}

/// Degenerate enclosure of a rational.
pub fn from_rational(r: &Rational) -> Enclosure {
    Enclosure::from_rational(r.clone())
}
