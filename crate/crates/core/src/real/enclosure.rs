use std::fmt;
use std::sync::{Arc, Mutex};

use super::{DecimalExpansion, Interval};
use crate::error::{RealError, Result};
use crate::tower::Rational;

type RawBounds = dyn Fn(u32) -> Result<Interval> + Send + Sync;

struct Node {
    exact: Option<Rational>,
    raw: Box<RawBounds>,
    /// `cache[m]` is the nested bound at precision `m`.
    cache: Mutex<Vec<Interval>>,
}

/// A real given by rational intervals indexed by precision.
///
/// `bounds(m)` has width at most `10^-m`, and `bounds(m + 1) ⊆ bounds(m)`.
/// Constructors supply a raw bound function that only has to meet the width
/// contract; nesting is enforced here by intersecting with coarser bounds.
/// A raw bound that misses the previous ones is reported as
/// [`RealError::EnclosureLaw`].
#[derive(Clone)]
pub struct Enclosure(Arc<Node>);

/// Verdict of [`compare_at`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    /// The enclosures overlap at this precision: `|x - y| ≤ 2·10^-m`.
    Indistinguishable(u32),
}

impl Enclosure {
    /// Builds an enclosure from raw bounds. `raw(m)` must contain the value
    /// and have width at most `10^-m`.
    pub fn from_fn<F>(raw: F) -> Self
    where
        F: Fn(u32) -> Result<Interval> + Send + Sync + 'static,
    {
        Enclosure(Arc::new(Node {
            exact: None,
            raw: Box::new(raw),
            cache: Mutex::new(Vec::new()),
        }))
    }

    /// Like [`Enclosure::from_fn`], for a value known to equal `exact`.
    pub(crate) fn from_fn_exact<F>(exact: Rational, raw: F) -> Self
    where
        F: Fn(u32) -> Result<Interval> + Send + Sync + 'static,
    {
        Enclosure(Arc::new(Node {
            exact: Some(exact),
            raw: Box::new(raw),
            cache: Mutex::new(Vec::new()),
        }))
    }

    /// The degenerate enclosure `[r, r]` at every precision.
    pub fn from_rational(r: Rational) -> Self {
        let point = Interval::point(r.clone());
        Enclosure::from_fn_exact(r, move |_| Ok(point.clone()))
    }

    /// `[t_m, t_m + 10^-m]` from the truncation sequence `t_m`.
    ///
    /// Valid for any digit sequence, including one ending in nines.
    pub fn from_truncations<F>(truncation: F) -> Self
    where
        F: Fn(u32) -> Result<Rational> + Send + Sync + 'static,
    {
        Enclosure::from_fn(move |m| {
            let t = truncation(m)?;
            let hi = &t + &Rational::ulp(m);
            Ok(Interval::new(t, hi))
        })
    }

    pub fn from_expansion(a: &DecimalExpansion) -> Self {
        if let Some(v) = a.exact_value() {
            return Enclosure::from_rational(v);
        }
        let a = a.clone();
        Enclosure::from_truncations(move |m| a.truncate(m))
    }

    /// The exact rational value, when known.
    pub fn exact(&self) -> Option<&Rational> {
        self.0.exact.as_ref()
    }

    /// The nested bound at precision `m`.
    pub fn bounds(&self, m: u32) -> Result<Interval> {
        let node = &self.0;
        if let Some(r) = &node.exact {
            return Ok(Interval::point(r.clone()));
        }
        let mut cache = node.cache.lock().unwrap_or_else(|e| e.into_inner());
        while cache.len() <= m as usize {
            let k = cache.len() as u32;
            let raw = (node.raw)(k)?;
            if !raw.within_ulp(k) {
                return Err(RealError::EnclosureLaw(format!(
                    "bound {raw} at precision {k} is wider than 10^-{k}"
                )));
            }
            let nested = match cache.last() {
                None => raw,
                Some(prev) => prev.intersect(&raw).ok_or_else(|| {
                    RealError::EnclosureLaw(format!(
                        "bound {raw} at precision {k} misses {prev}"
                    ))
                })?,
            };
            cache.push(nested);
        }
        Ok(cache[m as usize].clone())
    }
}

impl From<Rational> for Enclosure {
    fn from(r: Rational) -> Self {
        Enclosure::from_rational(r)
    }
}

impl fmt::Debug for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.exact {
            Some(r) => write!(f, "Enclosure(= {r})"),
            None => {
                let cache = self.0.cache.lock().unwrap_or_else(|e| e.into_inner());
                match cache.last() {
                    Some(iv) => write!(f, "Enclosure({iv} at 10^-{})", cache.len() - 1),
                    None => write!(f, "Enclosure(unevaluated)"),
                }
            }
        }
    }
}

/// Compares two enclosures at one precision. Equality is never decided.
pub fn compare_at(x: &Enclosure, y: &Enclosure, m: u32) -> Result<Comparison> {
    let bx = x.bounds(m)?;
    let by = y.bounds(m)?;
    Ok(if bx.hi < by.lo {
        Comparison::Less
    } else if by.hi < bx.lo {
        Comparison::Greater
    } else {
        Comparison::Indistinguishable(m)
    })
}

/// Raises the precision from `start` by doubling until the verdict separates
/// the values or `cap` is reached.
pub fn compare_up_to(x: &Enclosure, y: &Enclosure, start: u32, cap: u32) -> Result<Comparison> {
    let mut m = start.min(cap);
    loop {
        let verdict = compare_at(x, y, m)?;
        if !matches!(verdict, Comparison::Indistinguishable(_)) || m >= cap {
            return Ok(verdict);
        }
        m = (m.max(1) * 2).min(cap);
    }
}
