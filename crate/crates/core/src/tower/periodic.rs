use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{pow10, Natural, Rational};
use crate::error::{RealError, Result};

/// A periodic decimal expansion `±i.pre(per)`. An empty period means the
/// expansion terminates.
///
/// Expansions ending in a tail of nines are rejected by [`PeriodicDecimal::new`];
/// [`PeriodicDecimal::normalize_nines`] maps them to the equal finite expansion
/// (`1.4(9)` to `1.5`). The canonical representative of a rational is the one
/// produced by [`rat_to_periodic`], with minimal preperiod and period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicDecimal {
    negative: bool,
    int_part: Natural,
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

fn check_digits(digits: &[u8]) -> Result<()> {
    match digits.iter().find(|&&d| d > 9) {
        Some(&d) => Err(RealError::InvalidDigit(d)),
        None => Ok(()),
    }
}

fn is_nines_tail(period: &[u8]) -> bool {
    !period.is_empty() && period.iter().all(|&d| d == 9)
}

impl PeriodicDecimal {
    pub fn new(
        negative: bool,
        int_part: Natural,
        preperiod: Vec<u8>,
        period: Vec<u8>,
    ) -> Result<Self> {
        check_digits(&preperiod)?;
        check_digits(&period)?;
        let raw = PeriodicDecimal {
            negative,
            int_part,
            preperiod,
            period,
        };
        if is_nines_tail(&raw.period) {
            let normalized = rat_to_periodic(&raw.value()).to_string();
            return Err(RealError::NinesTail {
                input: raw.to_string(),
                normalized,
            });
        }
        Ok(raw)
    }

    /// Like [`PeriodicDecimal::new`], but a nines tail is identified with the
    /// finite expansion it equals, returned in canonical form.
    pub fn normalize_nines(
        negative: bool,
        int_part: Natural,
        preperiod: Vec<u8>,
        period: Vec<u8>,
    ) -> Result<Self> {
        check_digits(&preperiod)?;
        check_digits(&period)?;
        let raw = PeriodicDecimal {
            negative,
            int_part,
            preperiod,
            period,
        };
        if is_nines_tail(&raw.period) {
            Ok(rat_to_periodic(&raw.value()))
        } else {
            Ok(raw)
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn int_part(&self) -> &Natural {
        &self.int_part
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    pub fn is_terminating(&self) -> bool {
        self.period.is_empty()
    }

    /// Digit `n ≥ 1` after the decimal point.
    pub fn digit(&self, n: usize) -> u8 {
        assert!(n >= 1, "digits are indexed from 1");
        let i = n - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else if self.period.is_empty() {
            0
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// Geometric-series value, without the nines check.
    fn value(&self) -> Rational {
        let digits_value = |ds: &[u8]| {
            ds.iter()
                .fold(BigInt::zero(), |acc, &d| acc * 10 + BigInt::from(d))
        };
        let pre_len = self.preperiod.len() as u32;
        let int = BigInt::from(self.int_part.as_biguint().clone());
        let mut v = Rational::from_integer(int)
            + Rational::decimal(digits_value(&self.preperiod), pre_len);
        if !self.period.is_empty() {
            let p = self.period.len() as u32;
            let den = pow10(pre_len) * (pow10(p) - 1);
            v = v + Rational::new(digits_value(&self.period), den).expect("nonzero");
        }
        if self.negative {
            -v
        } else {
            v
        }
    }
}

/// Exact rational value of a normalized periodic decimal.
pub fn periodic_to_rat(d: &PeriodicDecimal) -> Result<Rational> {
    if is_nines_tail(&d.period) {
        return Err(RealError::NinesTail {
            input: d.to_string(),
            normalized: rat_to_periodic(&d.value()).to_string(),
        });
    }
    Ok(d.value())
}

/// Long division of `|p|` with remainder-cycle detection. The first repeated
/// remainder closes the cycle, so preperiod and period are minimal.
pub fn rat_to_periodic(p: &Rational) -> PeriodicDecimal {
    let den = p.denom().magnitude().clone();
    let (int, mut rem) = p.numer().magnitude().div_rem(&den);
    let mut digits = Vec::new();
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut period_start = None;
    while !rem.is_zero() {
        if let Some(&i) = seen.get(&rem) {
            period_start = Some(i);
            break;
        }
        seen.insert(rem.clone(), digits.len());
        let (q, r) = (rem * 10u32).div_rem(&den);
        digits.push(q.to_u8().expect("quotient digit"));
        rem = r;
    }
    let (preperiod, period) = match period_start {
        Some(i) => {
            let period = digits.split_off(i);
            (digits, period)
        }
        None => (digits, Vec::new()),
    };
    PeriodicDecimal {
        negative: p.is_negative(),
        int_part: Natural::from(int),
        preperiod,
        period,
    }
}

impl fmt::Display for PeriodicDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", self.int_part)?;
        if self.preperiod.is_empty() && self.period.is_empty() {
            return Ok(());
        }
        write!(f, ".")?;
        for d in &self.preperiod {
            write!(f, "{d}")?;
        }
        if !self.period.is_empty() {
            write!(f, "(")?;
            for d in &self.period {
                write!(f, "{d}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parsed pieces of `[-]int[.pre[(per)]]`.
pub(crate) struct PeriodicParts {
    pub negative: bool,
    pub int_part: Natural,
    pub preperiod: Vec<u8>,
    pub period: Vec<u8>,
}

fn digit_vec(s: &str) -> Option<Vec<u8>> {
    s.bytes()
        .map(|b| b.is_ascii_digit().then(|| b - b'0'))
        .collect()
}

pub(crate) fn split_periodic(s: &str) -> Option<PeriodicParts> {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_text, frac) = match body.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (body, None),
    };
    let int_part: Natural = int_text.parse().ok()?;
    let (preperiod, period) = match frac {
        None => (Vec::new(), Vec::new()),
        Some(frac) => match frac.split_once('(') {
            None if !frac.is_empty() => (digit_vec(frac)?, Vec::new()),
            None => return None,
            Some((pre, rest)) => {
                let per = rest.strip_suffix(')')?;
                if per.is_empty() {
                    return None;
                }
                (digit_vec(pre)?, digit_vec(per)?)
            }
        },
    };
    Some(PeriodicParts {
        negative,
        int_part,
        preperiod,
        period,
    })
}

impl FromStr for PeriodicDecimal {
    type Err = RealError;

    /// Strict parse of `[-]i[.pre[(per)]]`; nines tails are rejected with the
    /// normalized form as a hint.
    fn from_str(s: &str) -> Result<Self> {
        let parts = split_periodic(s).ok_or_else(|| RealError::Parse {
            kind: "periodic decimal",
            text: s.to_string(),
        })?;
        PeriodicDecimal::new(parts.negative, parts.int_part, parts.preperiod, parts.period)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(s: &str) -> PeriodicDecimal {
        s.parse().unwrap()
    }

    /// Independent long division on machine integers.
    fn long_division(num: u64, den: u64, count: usize) -> Vec<u8> {
        let mut rem = num % den;
        (0..count)
            .map(|_| {
                rem *= 10;
                let d = (rem / den) as u8;
                rem %= den;
                d
            })
            .collect()
    }

    #[test]
    fn to_periodic_examples() {
        assert_eq!(rat_to_periodic(&r("1/3")).to_string(), "0.(3)");
        let seventh = rat_to_periodic(&r("1/7"));
        assert_eq!(seventh.to_string(), "0.(142857)");
        assert_eq!(seventh.period().len(), 6);
        assert_eq!(rat_to_periodic(&r("3/2")).to_string(), "1.5");
        assert_eq!(rat_to_periodic(&r("1/6")).to_string(), "0.1(6)");
        assert_eq!(rat_to_periodic(&r("-22/7")).to_string(), "-3.(142857)");
        assert_eq!(rat_to_periodic(&r("4")).to_string(), "4");
    }

    #[test]
    fn digits_match_long_division() {
        for (num, den) in [(1u64, 7u64), (5, 12), (22, 7), (1, 97), (3, 8)] {
            let d = rat_to_periodic(&r(&format!("{num}/{den}")));
            let expected = long_division(num, den, 60);
            let got: Vec<u8> = (1..=60).map(|n| d.digit(n)).collect();
            assert_eq!(got, expected, "{num}/{den}");
        }
    }

    #[test]
    fn to_rational_examples() {
        assert_eq!(periodic_to_rat(&p("0.(3)")).unwrap(), r("1/3"));
        assert_eq!(periodic_to_rat(&p("0.(142857)")).unwrap(), r("1/7"));
        assert_eq!(periodic_to_rat(&p("1.5")).unwrap(), r("3/2"));
        assert_eq!(periodic_to_rat(&p("0.50(0)")).unwrap(), r("1/2"));
    }

    #[test]
    fn nines_tail_rejected_with_hint() {
        match "1.4(9)".parse::<PeriodicDecimal>() {
            Err(RealError::NinesTail { normalized, .. }) => assert_eq!(normalized, "1.5"),
            other => panic!("expected nines rejection, got {other:?}"),
        }
        let n = PeriodicDecimal::normalize_nines(false, Natural::from(1), vec![4], vec![9]).unwrap();
        assert_eq!(n.to_string(), "1.5");
        assert_eq!(periodic_to_rat(&n).unwrap(), r("3/2"));
        let n = PeriodicDecimal::normalize_nines(false, Natural::zero(), vec![], vec![9, 9]).unwrap();
        assert_eq!(n.to_string(), "1");
    }

    #[test]
    fn text_round_trips_bit_exactly() {
        for s in ["0", "12", "-3.25", "0.(3)", "0.1(6)", "7.00(12)", "-0.(142857)", "0.50"] {
            assert_eq!(p(s).to_string(), s);
        }
        for s in ["", ".", "1.", "1.()", "1.(", "1.2)", "a.1", "1.2(3)4", "--1"] {
            assert!(s.parse::<PeriodicDecimal>().is_err(), "{s}");
        }
    }

    #[test]
    fn invalid_digits_rejected() {
        let err = PeriodicDecimal::new(false, Natural::zero(), vec![10], vec![]);
        assert_eq!(err, Err(RealError::InvalidDigit(10)));
    }
}
