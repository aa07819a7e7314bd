use super::interval_ops::{interval_add, interval_inv, interval_mul, interval_sub};
use crate::error::{RealError, Result};
use crate::real::{compare_up_to, Comparison, Enclosure, SignedReal};

/// Drops the part of each bound below zero, for a value known to be `≥ 0`.
fn nonneg(x: Enclosure) -> Enclosure {
    if x.exact().is_some() {
        return x;
    }
    Enclosure::from_fn(move |m| Ok(x.bounds(m)?.clamp_nonneg()))
}

/// `x + y` by cases:
///
/// - `x + y` and `x* + y* = (x + y)*` when the signs agree,
/// - `x + y* = x − y` if `y < x`, `(y − x)*` if `x < y`.
///
/// Magnitudes that cannot be separated by precision `cap` fail with
/// [`RealError::ZeroWithinCap`], unless both are exactly equal.
pub fn signed_add(x: &SignedReal, y: &SignedReal, cap: u32) -> Result<SignedReal> {
    let (mx, my) = (x.magnitude(), y.magnitude());
    if x.is_starred() == y.is_starred() {
        return Ok(SignedReal::with_star(interval_add(mx, my), x.is_starred()));
    }
    if let (Some(a), Some(b)) = (mx.exact(), my.exact()) {
        if a == b {
            return Ok(SignedReal::from_rational(&crate::tower::Rational::zero()));
        }
    }
    match compare_up_to(mx, my, 0, cap)? {
        Comparison::Greater => Ok(SignedReal::with_star(nonneg(interval_sub(mx, my)), x.is_starred())),
        Comparison::Less => Ok(SignedReal::with_star(nonneg(interval_sub(my, mx)), y.is_starred())),
        Comparison::Indistinguishable(_) => Err(RealError::ZeroWithinCap { cap }),
    }
}

/// Rule of signs: `x·y* = (x·y)*`, `x*·y* = x·y`.
pub fn signed_mul(x: &SignedReal, y: &SignedReal) -> SignedReal {
    SignedReal::with_star(
        interval_mul(x.magnitude(), y.magnitude()),
        x.is_starred() != y.is_starred(),
    )
}

/// `1/x`, keeping the sign.
pub fn signed_inv(x: &SignedReal, cap: u32) -> Result<SignedReal> {
    Ok(SignedReal::with_star(nonneg(interval_inv(x.magnitude(), cap)?), x.is_starred()))
}
