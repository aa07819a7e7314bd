use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ComparativeSystem, Decision};
use crate::error::{RealError, Result};
use crate::tower::Rational;

/// A formal segment given by its exact rational length in units `u`.
#[derive(Clone, PartialEq, Eq)]
pub struct Segment(Rational);

impl Segment {
    pub fn new(length: Rational) -> Result<Self> {
        if !length.is_positive() {
            return Err(RealError::NonPositive(format!("segment length {length}")));
        }
        Ok(Segment(length))
    }

    pub fn length(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// Length: comparison by juxtaposition, composition by concatenation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Lengths;

impl ComparativeSystem for Lengths {
    type Object = Segment;

    fn name(&self) -> &str {
        "length"
    }

    fn equiv(&self, x: &Segment, y: &Segment) -> Decision {
        Ok(x.0 == y.0)
    }

    fn precedes(&self, x: &Segment, y: &Segment) -> Decision {
        Ok(x.0 < y.0)
    }

    fn compose(&self, x: &Segment, y: &Segment) -> Segment {
        Segment(&x.0 + &y.0)
    }
}

/// Lengths with `≺` replaced by `≤`; a deliberately broken instance.
#[derive(Debug, Clone, Copy, Default)]
pub struct NonStrictLengths;

impl ComparativeSystem for NonStrictLengths {
    type Object = Segment;

    fn name(&self) -> &str {
        "length-nonstrict"
    }

    fn equiv(&self, x: &Segment, y: &Segment) -> Decision {
        Ok(x.0 == y.0)
    }

    fn precedes(&self, x: &Segment, y: &Segment) -> Decision {
        Ok(x.0 <= y.0)
    }

    fn compose(&self, x: &Segment, y: &Segment) -> Segment {
        Segment(&x.0 + &y.0)
    }
}

/// Seeded sample of segments with lengths `p/q`, `1 ≤ p ≤ 60`, `1 ≤ q ≤ 12`.
pub fn length_sample(size: usize, seed: u64) -> Vec<Segment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| {
            let p = rng.random_range(1..=60i64);
            let q = rng.random_range(1..=12i64);
            Segment(Rational::ratio(p, q))
        })
        .collect()
}

/// A rational segment or the diagonal of the unit square, known only through
/// its comparison oracle: `diag ≺ q·u` iff `2 < q²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthOrDiagonal {
    Segment(Segment),
    Diagonal,
}

impl LengthOrDiagonal {
    /// Direct comparison of the diagonal with a rational segment.
    pub fn diagonal_precedes(q: &Rational) -> bool {
        q.is_positive() && Rational::from(2) < q.pow(2)
    }

    pub fn precedes_diagonal(q: &Rational) -> bool {
        !q.is_positive() || q.pow(2) < Rational::from(2)
    }
}

/// Outcome of the finite refutation for the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalRefutation {
    pub max_denominator: u64,
    pub candidates_refuted: u64,
}

/// Shows that no rational value `c = p/q` with `q ≤ max_den` can serve as
/// `μ(diag)` when `μ(u) = 1`.
///
/// Candidates outside `(1, 2)` contradict `u ≺ diag ≺ 2u` through the order
/// property. For each candidate inside, the segment of length `c` has the same
/// measure as the diagonal, yet the oracle decides that one strictly precedes
/// the other, so `x ~ y ⇔ μ(x) = μ(y)` fails. The oracle can decide because
/// `c² ≠ 2`, checked exactly.
pub fn diagonal_has_no_rational_measure(max_den: u64) -> Result<DiagonalRefutation> {
    let unit = Rational::one();
    let two = Rational::from(2);
    if !LengthOrDiagonal::precedes_diagonal(&unit) || !LengthOrDiagonal::diagonal_precedes(&two) {
        return Err(RealError::AuditFailed("diagonal not between u and 2u".into()));
    }
    let mut refuted = 0u64;
    for q in 1..=max_den {
        for p in q..=2 * q {
            let c = Rational::new(BigInt::from(p), BigInt::from(q)).expect("q >= 1");
            if c.pow(2) == two {
                return Err(RealError::AuditFailed(format!("{c} squares to 2")));
            }
            let below = LengthOrDiagonal::diagonal_precedes(&c);
            let above = LengthOrDiagonal::precedes_diagonal(&c);
            if below == above {
                return Err(RealError::AuditFailed(format!("oracle undecided at {c}")));
            }
            refuted += 1;
        }
    }
    Ok(DiagonalRefutation {
        max_denominator: max_den,
        candidates_refuted: refuted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_oracle_brackets_sqrt2() {
        assert!(LengthOrDiagonal::diagonal_precedes(&Rational::ratio(3, 2)));
        assert!(LengthOrDiagonal::precedes_diagonal(&Rational::ratio(7, 5)));
        assert!(!LengthOrDiagonal::diagonal_precedes(&Rational::ratio(7, 5)));
    }

    #[test]
    fn no_rational_measure_for_the_diagonal_up_to_100() {
        let r = diagonal_has_no_rational_measure(100).unwrap();
        // sum over q of (q + 1) candidates p in [q, 2q]
        assert_eq!(r.candidates_refuted, (1..=100u64).map(|q| q + 1).sum::<u64>());
    }

    #[test]
    fn segments_must_be_positive() {
        assert!(Segment::new(Rational::zero()).is_err());
        assert!(length_sample(50, 9).iter().all(|s| s.length().is_positive()));
    }
}
