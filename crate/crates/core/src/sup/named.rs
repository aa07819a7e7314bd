use std::sync::Arc;

use super::oracle::{at_least_oracle, bound_oracle, nth_root_oracle, BoundOracle, CutOracle, FnOracle};
use crate::error::{RealError, Result};
use crate::gallery::e_enclosure;
use crate::tower::Rational;

/// Partial sums tried before the e oracle gives up.
const E_TERM_CAP: u32 = 4096;

fn unknown(name: &str) -> RealError {
    RealError::Parse {
        kind: "oracle",
        text: name.to_string(),
    }
}

fn rational(text: &str, name: &str) -> Result<Rational> {
    text.trim().parse().map_err(|_| unknown(name))
}

fn index(text: &str, name: &str) -> Result<u32> {
    text.trim().parse().map_err(|_| unknown(name))
}

/// `q ≥ e`, decided by the partial sums `S_n ≤ e ≤ S_n + 1/(n·n!)`.
pub fn e_oracle() -> Arc<dyn BoundOracle> {
    Arc::new(FnOracle(|q: &Rational| {
        let mut n = 4;
        while n <= E_TERM_CAP {
            let iv = e_enclosure(n);
            if q < &iv.lo {
                return Ok(false);
            }
            if q >= &iv.hi {
                return Ok(true);
            }
            n *= 2;
        }
        Err(RealError::CapExceeded { cap: E_TERM_CAP })
    }))
}

/// Parses `x^k<r` or `x^k<=r` (the part after `set:`).
fn power_set(pattern: &str, name: &str) -> Result<Arc<dyn BoundOracle>> {
    let rest = pattern.strip_prefix("x^").ok_or_else(|| unknown(name))?;
    let (k, r) = if let Some((k, r)) = rest.split_once("<=") {
        (k, r)
    } else {
        rest.split_once('<').ok_or_else(|| unknown(name))?
    };
    // Upper bounds of {x ≥ 0 : x^k < r} and {x ≥ 0 : x^k ≤ r} coincide.
    nth_root_oracle(&rational(r, name)?, index(k, name)?)
}

/// Built-in bound oracles by name:
///
/// | name | set |
/// |---|---|
/// | `sqrt:<r>` | `{x ≥ 0 : x² < r}` |
/// | `root:<k>:<r>` | `{x ≥ 0 : x^k < r}` |
/// | `set:x^<k><<r>`, `set:x^<k><=<r>` | as written |
/// | `below:<q>` | `{x ≥ 0 : x < q}` |
/// | `singleton:<q>` | `{q}` |
/// | `e` | partial sums of `Σ 1/n!` |
/// | `unit` | `{x : x ≤ 1}`, the unit segment |
/// | `diagonal` | `{x ≥ 0 : x² < 2}`, the unit square's diagonal |
pub fn named_oracle(name: &str) -> Result<Arc<dyn BoundOracle>> {
    let name = name.trim();
    let (head, rest) = name.split_once(':').unwrap_or((name, ""));
    match head {
        "sqrt" => nth_root_oracle(&rational(rest, name)?, 2),
        "root" => {
            let (k, r) = rest.split_once(':').ok_or_else(|| unknown(name))?;
            nth_root_oracle(&rational(r, name)?, index(k, name)?)
        }
        "set" => power_set(rest.trim(), name),
        "below" => Ok(at_least_oracle(&rational(rest, name)?)),
        "singleton" => {
            let q = rational(rest, name)?;
            if q.is_negative() {
                return Err(RealError::Negative(q.to_string()));
            }
            Ok(at_least_oracle(&q))
        }
        "e" if rest.is_empty() => Ok(e_oracle()),
        "unit" if rest.is_empty() => Ok(at_least_oracle(&Rational::one())),
        "diagonal" if rest.is_empty() => {
            let two = Rational::from(2);
            Ok(bound_oracle(move |q| !q.is_negative() && q * q >= two))
        }
        _ => Err(unknown(name)),
    }
}

struct BoundAsCut(Arc<dyn BoundOracle>);

impl CutOracle for BoundAsCut {
    fn exceeds(&self, q: &Rational) -> Result<bool> {
        self.0.is_upper_bound(q)
    }
}

/// The cut oracle of the object a named oracle describes: the object is
/// below `q` units exactly when `q` bounds the set.
pub fn named_cut(name: &str) -> Result<Arc<dyn CutOracle>> {
    Ok(Arc::new(BoundAsCut(named_oracle(name)?)))
}

/// Names accepted by [`named_oracle`], as patterns.
pub const ORACLE_PATTERNS: &[&str] = &[
    "sqrt:<r>",
    "root:<k>:<r>",
    "set:x^<k><<r>",
    "set:x^<k><=<r>",
    "below:<q>",
    "singleton:<q>",
    "e",
    "unit",
    "diagonal",
];
