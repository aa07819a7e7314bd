use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::oracle::{BoundOracle, Checked, CutOracle, InducedBound};
use crate::error::{RealError, Result};
use crate::real::{DecimalExpansion, DigitGenerator, DEFAULT_CAP};
use crate::tower::{Natural, Rational};

/// Searches stop looking for an upper bound past this natural.
pub const UNBOUNDED_LIMIT: u64 = 1_000_000_000_000_000_000;

/// Least upper bound of the set described by a [`BoundOracle`], as a lazy
/// digit stream.
///
/// Digit `n` is the greatest digit whose length-`n` truncation is not an
/// upper bound, so every truncation `t_m` satisfies "`t_m` is not an upper
/// bound, `t_m + 10^-m` is".
#[derive(Clone, Debug)]
pub struct SupremumResult {
    expansion: DecimalExpansion,
    oracle: Arc<Checked>,
    /// The set is `{0}` or empty: `0` itself is an upper bound.
    zero_bound: bool,
}

/// Where a run of nines that reached the cap begins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NinesTail {
    /// Position of the first 9 of the run (1-based).
    pub from: usize,
    /// Value with the tail carried out: `t_(from-1) + 10^-(from-1)`.
    pub normalized: Rational,
    /// Digits probed while confirming the run.
    pub probed_to: usize,
}

/// Digits of a supremum, with the nines diagnosis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupReadout {
    pub int_part: Natural,
    pub digits: Vec<u8>,
    pub nines: Option<NinesTail>,
}

impl SupReadout {
    /// `int.d1…dn`, as the engine produced it.
    pub fn raw(&self) -> String {
        let mut s = self.int_part.to_string();
        if !self.digits.is_empty() {
            s.push('.');
            s.extend(self.digits.iter().map(|d| char::from(b'0' + d)));
        }
        s
    }

    /// The first `n` digits of the value with any nines tail carried out.
    pub fn normalized(&self) -> String {
        match &self.nines {
            None => self.raw(),
            Some(t) => {
                let n = self.digits.len() as u32;
                let scaled = t.normalized.floor_scaled(n);
                let s = scaled.to_string();
                if n == 0 {
                    return s;
                }
                let width = n as usize + 1;
                let s = format!("{s:0>width$}");
                let (int, frac) = s.split_at(s.len() - n as usize);
                format!("{int}.{frac}")
            }
        }
    }
}

struct SupDigits {
    oracle: Arc<Checked>,
}

impl DigitGenerator for SupDigits {
    fn next_digit(&self, int_part: &Natural, prefix: &[u8]) -> Result<u8> {
        let n = prefix.len() as u32 + 1;
        let t = prefix
            .iter()
            .fold(BigInt::from(int_part.as_biguint().clone()), |acc, &d| acc * 10 + d);
        for d in (0..=9u8).rev() {
            let q = Rational::decimal(&t * 10 + d, n);
            if !self.oracle.is_upper_bound(&q)? {
                return Ok(d);
            }
        }
        Err(RealError::OracleInconsistent(format!(
            "every digit at position {n} after {} gives an upper bound",
            Rational::decimal(t, n - 1)
        )))
    }
}

/// Greatest natural that is not an upper bound: doubling, then bisection.
fn integer_part(o: &Checked) -> Result<Natural> {
    let mut lo = BigUint::zero();
    let mut hi = BigUint::from(1u32);
    while !o.is_upper_bound(&Rational::from(BigInt::from(hi.clone())))? {
        lo = hi.clone();
        hi *= 2u32;
        if hi > BigUint::from(UNBOUNDED_LIMIT) {
            return Err(RealError::Unbounded(format!(
                "no upper bound found below {UNBOUNDED_LIMIT}"
            )));
        }
    }
    // invariant: lo is not an upper bound, hi is
    while &hi - &lo > BigUint::from(1u32) {
        let mid = (&lo + &hi) / 2u32;
        if o.is_upper_bound(&Rational::from(BigInt::from(mid.clone())))? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Natural::from(lo))
}

/// Least upper bound of a non-empty bounded set of non-negative reals.
///
/// The set is `{0}` or empty when `0` is already an upper bound; the result
/// is then the zero expansion. Unbounded sets are reported once no upper
/// bound is found below [`UNBOUNDED_LIMIT`].
pub fn supremum(o: Arc<dyn BoundOracle>) -> Result<SupremumResult> {
    let checked = Arc::new(Checked::new(o));
    if checked.is_upper_bound(&Rational::zero())? {
        return Ok(SupremumResult {
            expansion: DecimalExpansion::zero(),
            oracle: checked,
            zero_bound: true,
        });
    }
    let a0 = integer_part(&checked)?;
    let expansion = DecimalExpansion::from_generator(
        a0,
        SupDigits {
            oracle: checked.clone(),
        },
    );
    Ok(SupremumResult {
        expansion,
        oracle: checked,
        zero_bound: false,
    })
}

/// `μ(x)`: `a0` is the greatest natural with `¬(x ≺ a0·u)`, then each digit
/// is the greatest with `¬(x ≺ (a0.a1…an)·u)`.
pub fn measure(o: Arc<dyn CutOracle>) -> Result<SupremumResult> {
    supremum(Arc::new(InducedBound(o)))
}

/// The first `n` digits of `μ(x)`.
pub fn measure_digits(o: Arc<dyn CutOracle>, n: usize) -> Result<DecimalExpansion> {
    let res = measure(o)?;
    res.expansion.digits(n)?;
    Ok(res.expansion)
}

impl SupremumResult {
    pub fn expansion(&self) -> &DecimalExpansion {
        &self.expansion
    }

    pub fn is_zero_bound(&self) -> bool {
        self.zero_bound
    }

    /// Oracle calls made so far.
    pub fn queries(&self) -> u64 {
        self.oracle.queries()
    }

    pub fn truncate(&self, m: u32) -> Result<Rational> {
        self.expansion.truncate(m)
    }

    /// `t_0, t_1, …, t_m`.
    pub fn approach(&self, m: u32) -> Result<Vec<Rational>> {
        (0..=m).map(|k| self.truncate(k)).collect()
    }

    /// Asks the oracle directly, through the same monotonicity check.
    pub fn is_upper_bound(&self, q: &Rational) -> Result<bool> {
        self.oracle.is_upper_bound(q)
    }

    /// First `n` digits. When they end in 9, digits are probed up to `cap`;
    /// a run of nines reaching the cap is reported as a possible attained
    /// bound, with the normalized value.
    pub fn readout(&self, n: usize, cap: usize) -> Result<SupReadout> {
        let digits = self.expansion.digits(n)?;
        let int_part = self.expansion.int_part().clone();
        let mut nines = None;
        if digits.last() == Some(&9) {
            let from = digits.iter().rposition(|&d| d != 9).map_or(1, |i| i + 2);
            let probe = cap.max(n);
            let mut all_nines = true;
            for k in n + 1..=probe {
                if self.expansion.digit(k)? != 9 {
                    all_nines = false;
                    break;
                }
            }
            if all_nines {
                let base = self.expansion.truncate((from - 1) as u32)?;
                nines = Some(NinesTail {
                    from,
                    normalized: &base + &Rational::ulp((from - 1) as u32),
                    probed_to: probe,
                });
            }
        }
        Ok(SupReadout {
            int_part,
            digits,
            nines,
        })
    }

    /// Readout with the default probe depth.
    pub fn readout_default(&self, n: usize) -> Result<SupReadout> {
        self.readout(n, DEFAULT_CAP as usize)
    }
}

/// Truncation sequence of a result; see [`SupremumResult::approach`].
pub fn approach_sequence(res: &SupremumResult, m: u32) -> Result<Vec<Rational>> {
    res.approach(m)
}
