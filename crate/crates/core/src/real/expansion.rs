use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::{RealError, Result};
use crate::tower::{periodic_to_rat, pow10, Natural, PeriodicDecimal, Rational};

/// Produces the digits of an expansion one at a time.
pub trait DigitGenerator: Send + Sync {
    /// Digit number `prefix.len() + 1`, given the integer part and the digits
    /// already fixed.
    fn next_digit(&self, int_part: &Natural, prefix: &[u8]) -> Result<u8>;
}

struct FnDigits<F>(F);

impl<F> DigitGenerator for FnDigits<F>
where
    F: Fn(usize) -> u8 + Send + Sync,
{
    fn next_digit(&self, _int_part: &Natural, prefix: &[u8]) -> Result<u8> {
        Ok((self.0)(prefix.len() + 1))
    }
}

enum Source {
    Periodic(PeriodicDecimal),
    Generated {
        generator: Box<dyn DigitGenerator>,
        memo: Mutex<Vec<u8>>,
    },
}

struct Inner {
    int_part: Natural,
    source: Source,
}

/// A non-negative decimal expansion `a0.a1a2a3…`: an integer part and a
/// digit sequence in `{0..9}`.
///
/// Generated digits are memoized; repeated queries agree. Cloning shares the
/// memo.
#[derive(Clone)]
pub struct DecimalExpansion(Arc<Inner>);

impl DecimalExpansion {
    /// Replays the preperiod, then cycles the period. Negative inputs are rejected.
    pub fn from_periodic(d: &PeriodicDecimal) -> Result<Self> {
        if d.is_negative() && periodic_to_rat(d)?.is_negative() {
            return Err(RealError::Negative(d.to_string()));
        }
        let mut d = d.clone();
        if d.is_negative() {
            d = PeriodicDecimal::new(false, d.int_part().clone(), d.preperiod().to_vec(), d.period().to_vec())?;
        }
        Ok(DecimalExpansion(Arc::new(Inner {
            int_part: d.int_part().clone(),
            source: Source::Periodic(d),
        })))
    }

    /// Exact expansion of a non-negative rational.
    pub fn from_rational(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(RealError::Negative(r.to_string()));
        }
        DecimalExpansion::from_periodic(&crate::tower::rat_to_periodic(r))
    }

    pub fn from_generator(int_part: Natural, generator: impl DigitGenerator + 'static) -> Self {
        DecimalExpansion(Arc::new(Inner {
            int_part,
            source: Source::Generated {
                generator: Box::new(generator),
                memo: Mutex::new(Vec::new()),
            },
        }))
    }

    /// Digits given by a closure of the position `n ≥ 1`.
    pub fn from_digit_fn<F>(int_part: Natural, digit: F) -> Self
    where
        F: Fn(usize) -> u8 + Send + Sync + 'static,
    {
        DecimalExpansion::from_generator(int_part, FnDigits(digit))
    }

    pub fn zero() -> Self {
        DecimalExpansion::from_rational(&Rational::zero()).expect("zero is non-negative")
    }

    pub fn int_part(&self) -> &Natural {
        &self.0.int_part
    }

    /// The periodic presentation, when the expansion was built from one.
    pub fn periodic(&self) -> Option<&PeriodicDecimal> {
        match &self.0.source {
            Source::Periodic(d) => Some(d),
            Source::Generated { .. } => None,
        }
    }

    pub fn exact_value(&self) -> Option<Rational> {
        self.periodic().map(|d| periodic_to_rat(d).expect("normalized at construction"))
    }

    /// Digit `n ≥ 1`.
    pub fn digit(&self, n: usize) -> Result<u8> {
        assert!(n >= 1, "digits are indexed from 1");
        match &self.0.source {
            Source::Periodic(d) => Ok(d.digit(n)),
            Source::Generated { generator, memo } => {
                let mut memo = memo.lock().unwrap_or_else(|e| e.into_inner());
                while memo.len() < n {
                    let d = generator.next_digit(&self.0.int_part, &memo)?;
                    if d > 9 {
                        return Err(RealError::InvalidDigit(d));
                    }
                    memo.push(d);
                }
                Ok(memo[n - 1])
            }
        }
    }

    /// The first `n` digits after the point.
    pub fn digits(&self, n: usize) -> Result<Vec<u8>> {
        if n == 0 {
            return Ok(Vec::new());
        }
        // Fill the memo in one pass before reading.
        self.digit(n)?;
        (1..=n).map(|i| self.digit(i)).collect()
    }

    /// `a_(m) · 10^m`, an integer.
    pub fn truncate_scaled(&self, m: u32) -> Result<BigInt> {
        let int = BigInt::from(self.0.int_part.as_biguint().clone());
        let digits = self.digits(m as usize)?;
        Ok(digits
            .iter()
            .fold(int, |acc, &d| acc * 10 + BigInt::from(d)))
    }

    /// The truncation `a_(m) = Σ_{n=0..m} a_n / 10^n`.
    pub fn truncate(&self, m: u32) -> Result<Rational> {
        Ok(Rational::new(self.truncate_scaled(m)?, pow10(m)).expect("nonzero"))
    }

    /// `int.d1d2…dn` as text.
    pub fn prefix_string(&self, n: usize) -> Result<String> {
        let digits = self.digits(n)?;
        let mut s = self.0.int_part.to_string();
        if n > 0 {
            s.push('.');
            s.extend(digits.iter().map(|d| char::from(b'0' + d)));
        }
        Ok(s)
    }
}

/// Free-function form of [`DecimalExpansion::truncate`].
pub fn truncate(a: &DecimalExpansion, m: u32) -> Result<Rational> {
    a.truncate(m)
}

impl fmt::Debug for DecimalExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.source {
            Source::Periodic(d) => write!(f, "DecimalExpansion({d})"),
            Source::Generated { memo, .. } => {
                let memo = memo.lock().unwrap_or_else(|e| e.into_inner());
                let digits: String = memo.iter().map(|d| char::from(b'0' + d)).collect();
                write!(f, "DecimalExpansion({}.{digits}…)", self.0.int_part)
            }
        }
    }
}
