use num_bigint::BigInt;

use super::sequences::e_partial_sum;
use crate::error::{RealError, Result};
use crate::real::{Enclosure, Interval};
use crate::tower::Rational;

/// `[S_n, S_n + 1/(n·n!)]`, which contains `e` for `n ≥ 1`.
///
/// The tail after `1/n!` is `1/(n+1)! · (1 + 1/(n+2) + 1/((n+2)(n+3)) + …)`,
/// bounded by the geometric series `1/(n+1)! · (n+2)/(n+1)`, which is at
/// most `1/(n·n!)`.
pub fn e_enclosure(n: u32) -> Interval {
    assert!(n >= 1, "e_enclosure needs n >= 1");
    let s = e_partial_sum(n as u64);
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    let tail = Rational::new(1.into(), fact * n).expect("nonzero");
    let hi = &s + &tail;
    Interval::new(s, hi)
}

/// `e` as an enclosure: the least `n` with `1/(n·n!) ≤ 10^-m`, per precision.
pub fn e_real() -> Enclosure {
    Enclosure::from_fn(|m| {
        let scale = BigInt::from(10).pow(m);
        let mut n: u32 = 1;
        let mut n_fact = BigInt::from(1);
        while &n_fact * n < scale {
            n += 1;
            n_fact *= n;
        }
        Ok(e_enclosure(n))
    })
}

/// Terms of the `atanh` series allowed before giving up on a width.
pub const LN_TERM_BUDGET: u32 = 20_000;

/// `2·atanh(z) = ln((1+z)/(1−z))` for `0 ≤ z < 1`, as an interval of
/// width at most `width`.
///
/// The terms `2z^j/j` (odd `j`) are positive, so the partial sum is a
/// lower bound; after the term `j = 2J−1` the rest is at most
/// `2z^(2J+1)/(2J+1) · 1/(1−z²)`.
fn two_atanh(z: &Rational, width: &Rational, budget: u32) -> Result<Interval> {
    let z2 = z * z;
    let geometric = (&Rational::one() - &z2).recip()?;
    let two = Rational::from(2);
    let mut sum = Rational::zero();
    let mut power = z.clone(); // z^j
    let mut j: i64 = 1;
    for _ in 0..budget {
        sum = &sum + &(&(&two * &power) * &Rational::ratio(1, j));
        power = &power * &z2;
        let tail = &(&(&two * &power) * &Rational::ratio(1, j + 2)) * &geometric;
        if &tail <= width {
            return Ok(Interval::new(sum.clone(), &sum + &tail));
        }
        j += 2;
    }
    Err(RealError::PrecisionShortfall(format!(
        "atanh series for z = {z} did not reach width {width} in {budget} terms"
    )))
}

/// `ln x` for rational `x > 0`, as an interval of width at most `width`.
///
/// `x = 2^k·y` with `1 ≤ y < 2`, then `ln x = k·ln 2 + ln y`, each logarithm
/// from the `atanh` series with `z = (y−1)/(y+1) ≤ 1/3`.
pub fn ln_enclosure(x: &Rational, width: &Rational) -> Result<Interval> {
    ln_enclosure_with_budget(x, width, LN_TERM_BUDGET)
}

pub fn ln_enclosure_with_budget(x: &Rational, width: &Rational, budget: u32) -> Result<Interval> {
    if !x.is_positive() {
        return Err(RealError::NonPositive(format!("ln of {x}")));
    }
    let two = Rational::from(2);
    let one = Rational::one();
    let mut y = x.clone();
    let mut k: i64 = 0;
    while y >= two {
        y = &y * &Rational::ratio(1, 2);
        k += 1;
    }
    while y < one {
        y = &y * &two;
        k -= 1;
    }
    let part = width * &Rational::ratio(1, 2 * (k.abs() + 1));
    let z = (&y - &one).checked_div(&(&y + &one))?;
    let ln_y = two_atanh(&z, &part, budget)?;
    if k == 0 {
        return Ok(ln_y);
    }
    let ln2 = two_atanh(&Rational::ratio(1, 3), &part, budget)?;
    let kk = Interval::point(Rational::from(k));
    Ok(kk.mul(&ln2).add(&ln_y))
}

/// `H_n = 1 + 1/2 + … + 1/n`.
pub fn harmonic_number(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| &acc + &Rational::ratio(1, k as i64))
}

/// Width allowed for each logarithm in [`gamma_enclosure`].
pub const GAMMA_LN_WIDTH: u32 = 40;

/// `[H_n − ln(n+1), H_n − ln n]`, which contains Euler's constant γ.
///
/// `H_n − ln n` decreases to γ and `H_n − ln(n+1)` increases to it, since
/// `1/(n+1) < ln(n+1) − ln n < 1/n`. The logarithms are replaced by outward
/// rational bounds.
pub fn gamma_enclosure(n: u64) -> Result<Interval> {
    gamma_enclosure_with(n, &Rational::ulp(GAMMA_LN_WIDTH), LN_TERM_BUDGET)
}

pub fn gamma_enclosure_with(n: u64, ln_width: &Rational, budget: u32) -> Result<Interval> {
    if n < 2 {
        return Err(RealError::NonPositive(format!("gamma_enclosure needs n >= 2, got {n}")));
    }
    let h = harmonic_number(n);
    let ln_next = ln_enclosure_with_budget(&Rational::from(n as i64 + 1), ln_width, budget)?;
    let ln_n = ln_enclosure_with_budget(&Rational::from(n as i64), ln_width, budget)?;
    Ok(Interval::new(&h - &ln_next.hi, &h - &ln_n.lo))
}
