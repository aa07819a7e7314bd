use std::sync::Arc;

use super::sequences::RationalSequence;
use crate::error::{RealError, Result};
use crate::sup::{supremum, FnOracle, SupReadout};
use crate::tower::Rational;

/// Neighborhoods `10^-m` audited by [`monotone_bounded_limit`].
pub const NEIGHBORHOOD_DEPTH: u32 = 10;

/// What [`monotone_bounded_limit`] established.
#[derive(Clone, Debug)]
pub struct LimitReport {
    pub horizon: u64,
    pub readout: SupReadout,
    /// `(m, n)`: term `n` lies within `10^-m` of the computed supremum.
    pub witnesses: Vec<(u32, u64)>,
}

impl LimitReport {
    pub fn neighborhoods_entered(&self) -> bool {
        self.witnesses.len() == NEIGHBORHOOD_DEPTH as usize + 1
    }
}

/// Audits that `s` is nondecreasing and bounded by `bound` up to `horizon`,
/// computes `sup{term(n) : n ≤ horizon}` with the supremum engine, and finds
/// for each `m ≤ 10` a term within `10^-m` of it.
pub fn monotone_bounded_limit(
    s: &RationalSequence,
    bound: &Rational,
    horizon: u64,
    digits: usize,
) -> Result<LimitReport> {
    let terms = s.terms(horizon);
    if let Some(i) = terms.windows(2).position(|w| w[1] < w[0]) {
        return Err(RealError::AuditFailed(format!(
            "{} decreases at n = {}: {} > {}",
            s.name,
            i + 1,
            terms[i],
            terms[i + 1]
        )));
    }
    if let Some(i) = terms.iter().position(|t| t > bound || t.is_negative()) {
        return Err(RealError::AuditFailed(format!(
            "{} leaves [0, {bound}] at n = {i}: {}",
            s.name, terms[i]
        )));
    }
    let terms = Arc::new(terms);
    let range = terms.clone();
    let oracle = FnOracle(move |q: &Rational| Ok(range.iter().all(|t| t <= q)));
    let res = supremum(Arc::new(oracle))?;
    let readout = res.readout(digits, digits.max(horizon as usize + 20))?;

    let mut witnesses = Vec::new();
    for m in 0..=NEIGHBORHOOD_DEPTH {
        // the supremum lies in [t_m, t_m + 10^-m], so any term ≥ t_m is
        // within 10^-m of it
        let t = res.truncate(m)?;
        match terms.iter().position(|a| *a >= t) {
            Some(n) => witnesses.push((m, n as u64)),
            None => break,
        }
    }
    Ok(LimitReport {
        horizon,
        readout,
        witnesses,
    })
}
