use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntegerPair, Natural};
use crate::error::{RealError, Result};

/// A rational number in canonical form: positive denominator, numerator and
/// denominator coprime. Structural equality is therefore class equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

// Denominators are positive, so `a/b < c/d` iff `a·d < c·b`.
impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom() == other.denom() {
            return self.numer().cmp(other.numer());
        }
        (self.numer() * other.denom()).cmp(&(other.numer() * self.denom()))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `10^k` as a big integer.
pub fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// `(a, b) ~ (c, d)` iff `a·d = b·c`.
pub fn pairs_equivalent(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> bool {
    a * d == b * c
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(RealError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// The class of the pair `(num, den)` of integers.
    pub fn from_pair(num: &IntegerPair, den: &IntegerPair) -> Result<Self> {
        Rational::new(num.to_bigint(), den.to_bigint())
    }

    pub fn from_integer(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    pub fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    pub fn from_natural(n: &Natural) -> Self {
        Rational::from_integer(BigInt::from(n.as_biguint().clone()))
    }

    /// `num / den` for machine integers; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den)).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `10^-k`.
    pub fn ulp(k: u32) -> Self {
        Rational(BigRational::new(BigInt::one(), pow10(k)))
    }

    /// `n / 10^k`.
    pub fn decimal(n: BigInt, k: u32) -> Self {
        Rational(BigRational::new(n, pow10(k)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(RealError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational> {
        if other.is_zero() {
            return Err(RealError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// `floor(self · 10^k)`.
    pub fn floor_scaled(&self, k: u32) -> BigInt {
        (self.numer() * pow10(k)).div_floor(self.denom())
    }

    /// `ceil(self · 10^k)`.
    pub fn ceil_scaled(&self, k: u32) -> BigInt {
        -((-(self.numer() * pow10(k))).div_floor(self.denom()))
    }

    /// Largest multiple of `10^-k` not above `self`.
    pub fn floor_to_grid(&self, k: u32) -> Rational {
        Rational::decimal(self.floor_scaled(k), k)
    }

    /// Smallest multiple of `10^-k` not below `self`.
    pub fn ceil_to_grid(&self, k: u32) -> Rational {
        Rational::decimal(self.ceil_scaled(k), k)
    }

    /// Whether `self` is a multiple of `10^-k`.
    pub fn on_grid(&self, k: u32) -> bool {
        (self.numer() * pow10(k)).is_multiple_of(self.denom())
    }

    /// Number of decimal places if the expansion terminates.
    pub fn terminating_places(&self) -> Option<u32> {
        let mut den = self.denom().magnitude().clone();
        let (mut twos, mut fives) = (0u32, 0u32);
        let two = BigUint::from(2u32);
        let five = BigUint::from(5u32);
        while (&den % &two).is_zero() {
            den /= &two;
            twos += 1;
        }
        while (&den % &five).is_zero() {
            den /= &five;
            fives += 1;
        }
        den.is_one().then_some(twos.max(fives))
    }

    pub fn min(self, other: Rational) -> Rational {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Rational) -> Rational {
        std::cmp::max(self, other)
    }

    pub fn sign(&self) -> Sign {
        self.numer().sign()
    }
}

/// Cross-multiplication order on canonical fractions.
pub fn rat_compare(p: &Rational, q: &Rational) -> Ordering {
    (p.numer() * q.denom()).cmp(&(q.numer() * p.denom()))
}

pub fn rat_add(p: &Rational, q: &Rational) -> Rational {
    Rational(&p.0 + &q.0)
}

pub fn rat_mul(p: &Rational, q: &Rational) -> Rational {
    Rational(&p.0 * &q.0)
}

pub fn rat_div(p: &Rational, q: &Rational) -> Result<Rational> {
    p.checked_div(q)
}

/// Minimal natural `n` with `x < n·y`, for `x, y > 0`.
pub fn archimedean_witness(x: &Rational, y: &Rational) -> Result<Natural> {
    if !x.is_positive() {
        return Err(RealError::NonPositive(format!("x = {x}")));
    }
    if !y.is_positive() {
        return Err(RealError::NonPositive(format!("y = {y}")));
    }
    let quotient: BigInt = x.checked_div(y)?.floor() + 1;
    Ok(Natural::from(
        quotient.to_biguint().expect("quotient of positives is positive"),
    ))
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        rat_add(self, rhs)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        rat_mul(self, rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_i64(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Rational {
    type Err = RealError;

    /// Accepts `p`, `-p`, `p/q` and `-p/q`; a zero denominator is a division error.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || RealError::Parse {
            kind: "rational",
            text: s.to_string(),
        };
        match s.split_once('/') {
            None => parse_int(s).map(Rational::from_integer).ok_or_else(bad),
            Some((p, q)) => {
                let num = parse_int(p).ok_or_else(bad)?;
                if q.starts_with('-') {
                    return Err(bad());
                }
                let den = parse_int(q).ok_or_else(bad)?;
                Rational::new(num, den)
            }
        }
    }
}
