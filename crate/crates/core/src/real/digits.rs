use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::{Enclosure, Interval};
use crate::error::{RealError, Result};
use crate::tower::{pow10, Rational};

/// Default precision cap, in decimal places.
pub const DEFAULT_CAP: u32 = 120;

/// Guard digits added to the requested digit count before escalating.
pub const GUARD_DIGITS: u32 = 10;

/// How negative values are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignNotation {
    /// `-6`
    #[default]
    Minus,
    /// `6*`, the star element of 6.
    Star,
}

/// Digits of a computed real.
///
/// Every settled digit is correct for every real in the enclosure that
/// produced it. When a grid point could not be excluded up to the cap,
/// `indeterminate_at` names the first undecided position (0 is the integer
/// part) and only the digits before it are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitReadout {
    pub negative: bool,
    /// The sign could not be decided; the magnitude is below `10^-cap`.
    pub sign_unknown: bool,
    pub int_part: BigInt,
    pub digits: Vec<u8>,
    pub indeterminate_at: Option<usize>,
    /// More nonzero digits may follow the printed ones.
    pub more: bool,
    pub precision_used: u32,
}

impl DigitReadout {
    /// `<int>.<digits>`, unsigned and without markers.
    pub fn plain(&self) -> String {
        if self.indeterminate_at == Some(0) {
            return String::new();
        }
        let mut s = self.int_part.to_string();
        if !self.digits.is_empty() || self.indeterminate_at == Some(1) {
            s.push('.');
        }
        s.extend(self.digits.iter().map(|d| char::from(b'0' + d)));
        s
    }

    /// `<int>.<digits>` plus `…` when more digits exist, or `?` at the
    /// undecided position.
    pub fn render(&self, notation: SignNotation) -> String {
        let mut body = self.plain();
        if self.indeterminate_at.is_some() || self.sign_unknown {
            body.push('?');
        } else if self.more {
            body.push('…');
        }
        if self.negative && !self.sign_unknown {
            match notation {
                SignNotation::Minus => format!("-{body}"),
                SignNotation::Star => format!("{body}*"),
            }
        } else {
            body
        }
    }

    pub fn is_settled(&self) -> bool {
        self.indeterminate_at.is_none() && !self.sign_unknown
    }

    /// Drops trailing zero digits when the value is exact and ends there.
    pub fn trim_exact(mut self) -> Self {
        if !self.more && self.is_settled() {
            while self.digits.last() == Some(&0) {
                self.digits.pop();
            }
        }
        self
    }
}

enum Settle {
    Done { scaled: BigInt },
    /// First position whose truncations disagree across the interval.
    Split(usize),
}

/// Whether every real in the non-negative interval has the same `n`-digit truncation.
fn settle(mag: &Interval, n: usize) -> Settle {
    let n32 = n as u32;
    let a = mag.lo.floor_scaled(n32);
    let b = mag.hi.floor_scaled(n32);
    if a == b {
        return Settle::Done { scaled: a };
    }
    let k = (0..=n)
        .find(|&j| mag.lo.floor_scaled(j as u32) != mag.hi.floor_scaled(j as u32))
        .expect("truncations differ at n");
    Settle::Split(k)
}

fn split_scaled(scaled: &BigInt, n: usize) -> (BigInt, Vec<u8>) {
    let (int, mut frac) = scaled.div_rem(&pow10(n as u32));
    let mut digits = vec![0u8; n];
    for slot in digits.iter_mut().rev() {
        let (q, r) = frac.div_rem(&BigInt::from(10));
        *slot = r.to_u8().expect("digit");
        frac = q;
    }
    (int, digits)
}

fn starting_precision(n: usize, cap: u32) -> u32 {
    (n as u32 + GUARD_DIGITS).min(cap)
}

fn next_precision(p: u32, cap: u32) -> u32 {
    (p.max(1) * 2).min(cap)
}

fn exact_ends_at(x: &Enclosure, scaled: &BigInt, n: usize, negative: bool) -> bool {
    match x.exact() {
        Some(r) => {
            let value = Rational::decimal(scaled.clone(), n as u32);
            if negative {
                *r == -value
            } else {
                *r == value
            }
        }
        None => false,
    }
}

fn finish(
    mag: &Interval,
    x: &Enclosure,
    n: usize,
    p: u32,
    negative: bool,
    sign_unknown: bool,
    outcome: Settle,
) -> DigitReadout {
    match outcome {
        Settle::Done { scaled } => {
            let more = !exact_ends_at(x, &scaled, n, negative);
            let (int_part, digits) = split_scaled(&scaled, n);
            DigitReadout {
                negative,
                sign_unknown,
                int_part,
                digits,
                indeterminate_at: None,
                more,
                precision_used: p,
            }
        }
        Settle::Split(k) => {
            let lo_scaled = mag.lo.floor_scaled(n as u32);
            let (int_part, mut digits) = split_scaled(&lo_scaled, n);
            digits.truncate(k.saturating_sub(1));
            DigitReadout {
                negative,
                sign_unknown,
                int_part,
                digits,
                indeterminate_at: Some(k),
                more: true,
                precision_used: p,
            }
        }
    }
}

/// First `n` digits of a non-negative enclosure, escalating precision from
/// `n + 10` by doubling up to `cap`.
///
/// Bounds below zero are clamped, since the value is assumed non-negative.
pub fn digits_from_enclosure(x: &Enclosure, n: usize, cap: u32) -> Result<DigitReadout> {
    let mut p = starting_precision(n, cap);
    loop {
        let iv = x.bounds(p)?;
        if iv.hi.is_negative() {
            return Err(RealError::Negative(format!("enclosure {iv}")));
        }
        let mag = iv.clamp_nonneg();
        let outcome = settle(&mag, n);
        if matches!(outcome, Settle::Done { .. }) || p >= cap {
            return Ok(finish(&mag, x, n, p, false, false, outcome));
        }
        p = next_precision(p, cap);
    }
}

/// Digits of a real of either sign. When the sign is still open at the cap
/// the magnitude is below `10^-cap`; its digits are reported with
/// `sign_unknown` set.
pub fn signed_digits(x: &Enclosure, n: usize, cap: u32) -> Result<DigitReadout> {
    let mut p = starting_precision(n, cap);
    loop {
        let iv = x.bounds(p)?;
        let zero = Rational::zero();
        let (mag, negative, sign_unknown) = if iv.lo >= zero {
            (iv, false, false)
        } else if iv.hi <= zero {
            (iv.neg(), true, false)
        } else if p >= cap {
            let bound = iv.magnitude();
            (Interval::new(zero, bound), false, true)
        } else {
            p = next_precision(p, cap);
            continue;
        };
        let outcome = settle(&mag, n);
        if matches!(outcome, Settle::Done { .. }) || p >= cap {
            return Ok(finish(&mag, x, n, p, negative, sign_unknown, outcome));
        }
        p = next_precision(p, cap);
    }
}

/// Exact decimal digits of a rational, shortest form when it terminates
/// within `n` places.
pub fn rational_digits(r: &Rational, n: usize) -> DigitReadout {
    let mag = r.abs();
    let scaled = mag.floor_scaled(n as u32);
    let more = Rational::decimal(scaled.clone(), n as u32) != mag;
    let (int_part, digits) = split_scaled(&scaled, n);
    DigitReadout {
        negative: r.is_negative(),
        sign_unknown: false,
        int_part: int_part.abs(),
        digits,
        indeterminate_at: None,
        more,
        precision_used: 0,
    }
    .trim_exact()
}
