use super::{DecimalExpansion, Enclosure};
use crate::tower::Rational;

/// A non-negative real `x` or its star element `x*`, the formal additive
/// inverse with `x + x* = 0`.
#[derive(Clone, Debug)]
pub struct SignedReal {
    magnitude: Enclosure,
    starred: bool,
}

impl SignedReal {
    /// `magnitude` must enclose a non-negative value.
    pub fn new(magnitude: Enclosure) -> Self {
        SignedReal {
            magnitude,
            starred: false,
        }
    }

    pub fn from_expansion(a: &DecimalExpansion) -> Self {
        SignedReal::new(Enclosure::from_expansion(a))
    }

    /// `|r|`, starred when `r < 0`.
    pub fn from_rational(r: &Rational) -> Self {
        SignedReal {
            magnitude: Enclosure::from_rational(r.abs()),
            starred: r.is_negative(),
        }
    }

    pub(crate) fn with_star(magnitude: Enclosure, starred: bool) -> Self {
        let zero = magnitude.exact().is_some_and(Rational::is_zero);
        SignedReal {
            magnitude,
            starred: starred && !zero,
        }
    }

    /// `x ↦ x*` and `x* ↦ x`.
    pub fn star(&self) -> Self {
        SignedReal::with_star(self.magnitude.clone(), !self.starred)
    }

    pub fn is_starred(&self) -> bool {
        self.starred
    }

    pub fn magnitude(&self) -> &Enclosure {
        &self.magnitude
    }

    /// The value as a signed enclosure.
    pub fn to_enclosure(&self) -> Enclosure {
        if self.starred {
            crate::arithmetic::interval_neg(&self.magnitude)
        } else {
            self.magnitude.clone()
        }
    }
}
