use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::error::{RealError, Result};
use crate::real::{Enclosure, Interval};
use crate::tower::Rational;

/// Extra decimal places used inside an operation before widening back to
/// the `10^-m` contract.
const SLACK: u32 = 2;

/// Smallest `d` with `10^d ≥ b`, for `b ≥ 0`.
fn decimal_size(b: &Rational) -> u32 {
    let mut d = 0;
    let mut p = Rational::one();
    while &p < b {
        p = &p * &Rational::from(10);
        d += 1;
    }
    d
}

fn grid(iv: Interval, m: u32) -> Interval {
    iv.widen_to_grid(m + SLACK)
}

pub fn interval_neg(x: &Enclosure) -> Enclosure {
    if let Some(r) = x.exact() {
        return Enclosure::from_rational(-r);
    }
    let x = x.clone();
    Enclosure::from_fn(move |m| Ok(x.bounds(m)?.neg()))
}

pub fn interval_add(x: &Enclosure, y: &Enclosure) -> Enclosure {
    if let (Some(a), Some(b)) = (x.exact(), y.exact()) {
        return Enclosure::from_rational(a + b);
    }
    let (x, y) = (x.clone(), y.clone());
    Enclosure::from_fn(move |m| {
        let p = m + SLACK;
        Ok(grid(x.bounds(p)?.add(&y.bounds(p)?), m))
    })
}

/// `x − y` on enclosures.
pub fn interval_sub(x: &Enclosure, y: &Enclosure) -> Enclosure {
    interval_add(x, &interval_neg(y))
}

pub fn interval_mul(x: &Enclosure, y: &Enclosure) -> Enclosure {
    if let (Some(a), Some(b)) = (x.exact(), y.exact()) {
        return Enclosure::from_rational(a * b);
    }
    if [x, y].iter().any(|e| e.exact().is_some_and(Rational::is_zero)) {
        return Enclosure::from_rational(Rational::zero());
    }
    let (x, y) = (x.clone(), y.clone());
    Enclosure::from_fn(move |m| {
        // |xy − x'y'| ≤ |x||y − y'| + |y'||x − x'|, so the widths scale by at
        // most Bx + By + 1 where B bounds the magnitude at precision 0.
        let bx = x.bounds(0)?.magnitude();
        let by = y.bounds(0)?.magnitude();
        let scale = &(&bx + &by) + &Rational::one();
        let p = m + SLACK + decimal_size(&scale);
        Ok(grid(x.bounds(p)?.mul(&y.bounds(p)?), m))
    })
}

/// Finds a precision `≤ cap` at which `x` excludes zero.
fn separate_from_zero(x: &Enclosure, cap: u32) -> Result<(u32, Interval)> {
    let mut p = 0;
    loop {
        let b = x.bounds(p)?;
        if !b.contains_zero() {
            return Ok((p, b));
        }
        if p >= cap {
            return Err(RealError::SignUnknown { cap });
        }
        p = (p.max(1) * 2).min(cap);
    }
}

/// `1/x`. Fails with [`RealError::SignUnknown`] when `x` cannot be
/// separated from zero by precision `cap`.
pub fn interval_inv(x: &Enclosure, cap: u32) -> Result<Enclosure> {
    if let Some(r) = x.exact() {
        return Ok(Enclosure::from_rational(r.recip()?));
    }
    let (p0, b0) = separate_from_zero(x, cap)?;
    // On [lo, hi] away from zero, |1/a − 1/b| ≤ |a − b| / L².
    let low = b0.lo.abs().min(b0.hi.abs());
    let factor = (&low * &low).recip()?;
    let extra = decimal_size(&factor);
    let x = x.clone();
    Ok(Enclosure::from_fn(move |m| {
        let p = (m + SLACK + extra).max(p0);
        let b = x.bounds(p)?;
        let inv = Interval::new(b.hi.recip()?, b.lo.recip()?);
        Ok(grid(inv, m))
    }))
}

/// `x / y`.
pub fn interval_div(x: &Enclosure, y: &Enclosure, cap: u32) -> Result<Enclosure> {
    Ok(interval_mul(x, &interval_inv(y, cap)?))
}

fn nth_root_floor(n: &BigUint, k: u32) -> BigUint {
    n.nth_root(k)
}

fn nth_root_ceil(n: &BigUint, k: u32) -> BigUint {
    let r = n.nth_root(k);
    if &r.pow(k) == n {
        r
    } else {
        r + 1u32
    }
}

fn to_biguint(v: &BigInt) -> BigUint {
    match v.sign() {
        Sign::Minus => BigUint::zero(),
        _ => v.magnitude().clone(),
    }
}

/// The exact `k`-th root of a rational, when it is one.
pub fn exact_root(r: &Rational, k: u32) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = to_biguint(r.numer());
    let den = to_biguint(r.denom());
    let (a, b) = (num.nth_root(k), den.nth_root(k));
    (a.pow(k) == num && b.pow(k) == den)
        .then(|| Rational::new(BigInt::from(a), BigInt::from(b)).expect("nonzero root"))
}

/// The `k`-th root of a non-negative enclosure, `k ≥ 1`.
///
/// `t ↦ t^(1/k)` moves points by at most `|a − b|^(1/k)`, so the argument is
/// evaluated at precision `k·(m + 2)`. Negative values are reported when an
/// upper bound falls below zero.
pub fn interval_root(x: &Enclosure, k: u32) -> Result<Enclosure> {
    if k == 0 {
        return Err(RealError::NonPositive("root index 0".into()));
    }
    if k == 1 {
        return Ok(x.clone());
    }
    if let Some(r) = x.exact() {
        if r.is_negative() {
            return Err(RealError::Negative(format!("root({k}, {r})")));
        }
        if let Some(root) = exact_root(r, k) {
            return Ok(Enclosure::from_rational(root));
        }
    }
    let x = x.clone();
    Ok(Enclosure::from_fn(move |m| {
        let q = m + SLACK;
        let b = x.bounds(k * q)?;
        if b.hi.is_negative() {
            return Err(RealError::Negative(format!("root({k}, {b})")));
        }
        let b = b.clamp_nonneg();
        let places = k * q;
        let lo = nth_root_floor(&to_biguint(&b.lo.floor_scaled(places)), k);
        let hi = nth_root_ceil(&to_biguint(&b.hi.ceil_scaled(places)), k);
        Ok(Interval::new(
            Rational::decimal(lo.into(), q),
            Rational::decimal(hi.into(), q),
        ))
    }))
}

pub fn interval_sqrt(x: &Enclosure) -> Result<Enclosure> {
    interval_root(x, 2)
}

/// `x^k` by repeated multiplication.
pub fn interval_pow(x: &Enclosure, k: u32) -> Enclosure {
    let mut acc = Enclosure::from_rational(Rational::one());
    for _ in 0..k {
        acc = interval_mul(&acc, x);
    }
    acc
}
