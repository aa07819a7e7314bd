use std::fmt;

use crate::tower::Rational;

/// A closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(r: Rational) -> Self {
        Interval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// `width ≤ 10^-m`.
    pub fn within_ulp(&self, m: u32) -> bool {
        self.width() <= Rational::ulp(m)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.iter().max().expect("four products").clone();
        Interval { lo, hi }
    }

    /// Largest absolute value in the interval.
    pub fn magnitude(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Outward rounding of both endpoints to the `10^-k` grid.
    pub fn widen_to_grid(&self, k: u32) -> Interval {
        Interval {
            lo: self.lo.floor_to_grid(k),
            hi: self.hi.ceil_to_grid(k),
        }
    }

    /// Intersection with `[0, ∞)`; an interval entirely below zero becomes `[0, 0]`.
    pub fn clamp_nonneg(&self) -> Interval {
        let zero = Rational::zero();
        Interval {
            lo: self.lo.clone().max(zero.clone()),
            hi: self.hi.clone().max(zero),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
