//! Magnitudes as extensive comparative systems, and measure mappings.
//!
//! A system is a set of objects with an equivalence `~`, a strict order `≺`
//! and a composition `∘`. The nine axioms are universally quantified
//! statements, so they are checked exhaustively on a finite carrier sample.
//! A passing report means no counterexample was found on that sample; it is
//! not a proof.
//!
//! Carriers never contain a neutral object for `∘`: the axiom
//! `x ≠ y ⇒ x ≺ x∘y` cannot hold if some `y` satisfies `x∘y ~ x`.
//!
//! Area instances (comparison by superposition) are not implemented.

mod cardinality;
mod length;
mod report;

use std::fmt;

pub use cardinality::{cardinality_sample, Cardinality, TokenSet};
pub use length::{
    diagonal_has_no_rational_measure, length_sample, DiagonalRefutation, LengthOrDiagonal,
    Lengths, NonStrictLengths, Segment,
};
pub use report::{AxiomOutcome, AxiomReport, MeasureReport, PropertyOutcome};

use crate::error::{RealError, Result};
use crate::tower::Natural;

/// The comparison technique failed to decide a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Undecided(pub String);

pub type Decision = std::result::Result<bool, Undecided>;

/// A magnitude: objects with direct comparison and composition.
pub trait ComparativeSystem {
    type Object: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> &str;
    fn equiv(&self, x: &Self::Object, y: &Self::Object) -> Decision;
    fn precedes(&self, x: &Self::Object, y: &Self::Object) -> Decision;
    fn compose(&self, x: &Self::Object, y: &Self::Object) -> Self::Object;
}

/// Default iteration cap for Archimedean witnesses.
pub const ARCHIMEDEAN_CAP: u64 = 100_000;

fn decided(d: Decision) -> Result<bool> {
    d.map_err(|Undecided(why)| RealError::AuditFailed(format!("harness error: {why}")))
}

/// `n·y := y ∘ ⋯ ∘ y` (n times), for `n ≥ 1`.
pub fn multiple<S: ComparativeSystem>(s: &S, y: &S::Object, n: u64) -> S::Object {
    assert!(n >= 1, "multiples start at 1");
    let mut acc = y.clone();
    for _ in 1..n {
        acc = s.compose(&acc, y);
    }
    acc
}

/// Minimal `n` with `x ≺ n·y`, found by iterated composition.
pub fn archimedean_witness_obj<S: ComparativeSystem>(
    s: &S,
    x: &S::Object,
    y: &S::Object,
    cap: u64,
) -> Result<Natural> {
    let mut acc = y.clone();
    let mut n = 1u64;
    while !decided(s.precedes(x, &acc))? {
        if n >= cap {
            return Err(RealError::NonArchimedean { cap });
        }
        acc = s.compose(&acc, y);
        n += 1;
    }
    Ok(Natural::from(n))
}

fn fail(witness: String) -> AxiomOutcome {
    AxiomOutcome::Fail(witness)
}

/// Checks the nine axioms on every pair and triple of `carrier`.
///
/// An undecided relation aborts with a harness error rather than counting as
/// an axiom failure.
pub fn check_axioms<S: ComparativeSystem>(s: &S, carrier: &[S::Object]) -> Result<AxiomReport> {
    check_axioms_capped(s, carrier, ARCHIMEDEAN_CAP)
}

pub fn check_axioms_capped<S: ComparativeSystem>(
    s: &S,
    carrier: &[S::Object],
    arch_cap: u64,
) -> Result<AxiomReport> {
    let eq = |x: &S::Object, y: &S::Object| decided(s.equiv(x, y));
    let lt = |x: &S::Object, y: &S::Object| decided(s.precedes(x, y));
    let mut outcomes = Vec::with_capacity(9);

    // 1: ~ is an equivalence relation.
    let mut verdict = AxiomOutcome::Pass(None);
    'equivalence: for x in carrier {
        if !eq(x, x)? {
            verdict = fail(format!("reflexivity x={x:?}"));
            break;
        }
        for y in carrier {
            if eq(x, y)? != eq(y, x)? {
                verdict = fail(format!("symmetry x={x:?} y={y:?}"));
                break 'equivalence;
            }
            if !eq(x, y)? {
                continue;
            }
            for z in carrier {
                if eq(y, z)? && !eq(x, z)? {
                    verdict = fail(format!("transitivity x={x:?} y={y:?} z={z:?}"));
                    break 'equivalence;
                }
            }
        }
    }
    outcomes.push(verdict);

    // 2: ≺ is transitive.
    let mut verdict = AxiomOutcome::Pass(None);
    'transitive: for x in carrier {
        for y in carrier {
            if !lt(x, y)? {
                continue;
            }
            for z in carrier {
                if lt(y, z)? && !lt(x, z)? {
                    verdict = fail(format!("x={x:?} y={y:?} z={z:?}"));
                    break 'transitive;
                }
            }
        }
    }
    outcomes.push(verdict);

    // 3: (x ≺ y) ⇒ ¬(y ≺ x).
    outcomes.push(first_pair_failure(carrier, |x, y| {
        Ok(!lt(x, y)? || !lt(y, x)?)
    })?);

    // 4: trichotomy.
    outcomes.push(first_pair_failure(carrier, |x, y| {
        Ok(lt(x, y)? || lt(y, x)? || eq(x, y)?)
    })?);

    // 5: associativity up to ~.
    let mut verdict = AxiomOutcome::Pass(None);
    'assoc: for x in carrier {
        for y in carrier {
            let xy = s.compose(x, y);
            for z in carrier {
                let left = s.compose(x, &s.compose(y, z));
                let right = s.compose(&xy, z);
                if !eq(&left, &right)? {
                    verdict = fail(format!("x={x:?} y={y:?} z={z:?}"));
                    break 'assoc;
                }
            }
        }
    }
    outcomes.push(verdict);

    // 6: commutativity up to ~.
    outcomes.push(first_pair_failure(carrier, |x, y| {
        eq(&s.compose(x, y), &s.compose(y, x))
    })?);

    // 7: x ≺ y ⇔ x∘z ≺ y∘z.
    let mut verdict = AxiomOutcome::Pass(None);
    'monotone: for x in carrier {
        for y in carrier {
            let before = lt(x, y)?;
            for z in carrier {
                if before != lt(&s.compose(x, z), &s.compose(y, z))? {
                    verdict = fail(format!("x={x:?} y={y:?} z={z:?}"));
                    break 'monotone;
                }
            }
        }
    }
    outcomes.push(verdict);

    // 8: x ≠ y ⇒ x ≺ x∘y.
    outcomes.push(first_pair_failure(carrier, |x, y| {
        Ok(x == y || lt(x, &s.compose(x, y))?)
    })?);

    // 9: Archimedean, reporting the largest witness used.
    let mut verdict = AxiomOutcome::Pass(Some(0));
    'archimedes: for x in carrier {
        for y in carrier {
            match archimedean_witness_obj(s, x, y, arch_cap) {
                Ok(n) => {
                    let n = n.to_u64().unwrap_or(u64::MAX);
                    if let AxiomOutcome::Pass(Some(max)) = &mut verdict {
                        *max = (*max).max(n);
                    }
                }
                Err(RealError::NonArchimedean { cap }) => {
                    verdict = fail(format!("x={x:?} y={y:?} no n <= {cap}"));
                    break 'archimedes;
                }
                Err(e) => return Err(e),
            }
        }
    }
    outcomes.push(verdict);

    Ok(AxiomReport {
        system: s.name().to_string(),
        sample_size: carrier.len(),
        outcomes,
    })
}

fn first_pair_failure<T: fmt::Debug>(
    carrier: &[T],
    mut holds: impl FnMut(&T, &T) -> Result<bool>,
) -> Result<AxiomOutcome> {
    for x in carrier {
        for y in carrier {
            if !holds(x, y)? {
                return Ok(fail(format!("x={x:?} y={y:?}")));
            }
        }
    }
    Ok(AxiomOutcome::Pass(None))
}

/// Checks the three measure-map properties on all carrier pairs:
/// `x ~ y ⇔ μ(x) = μ(y)`, `x ≺ y ⇔ μ(x) < μ(y)`, `μ(x∘y) = μ(x) + μ(y)`.
pub fn check_measure_map<S, M, F>(s: &S, carrier: &[S::Object], mu: F) -> Result<MeasureReport>
where
    S: ComparativeSystem,
    M: Clone + Ord + fmt::Debug,
    for<'a> &'a M: std::ops::Add<&'a M, Output = M>,
    F: Fn(&S::Object) -> M,
{
    let measures: Vec<M> = carrier.iter().map(&mu).collect();
    let mut outcomes = vec![PropertyOutcome::Pass; 3];
    for (i, x) in carrier.iter().enumerate() {
        for (j, y) in carrier.iter().enumerate() {
            let (mx, my) = (&measures[i], &measures[j]);
            if outcomes[0] == PropertyOutcome::Pass && decided(s.equiv(x, y))? != (mx == my) {
                outcomes[0] = PropertyOutcome::Fail(format!("x={x:?} y={y:?}"));
            }
            if outcomes[1] == PropertyOutcome::Pass && decided(s.precedes(x, y))? != (mx < my) {
                outcomes[1] = PropertyOutcome::Fail(format!("x={x:?} y={y:?}"));
            }
            if outcomes[2] == PropertyOutcome::Pass {
                let composed = mu(&s.compose(x, y));
                let summed = mx + my;
                if composed != summed {
                    outcomes[2] = PropertyOutcome::Fail(format!(
                        "x={x:?} y={y:?} mu(x o y)={composed:?} mu(x)+mu(y)={summed:?}"
                    ));
                }
            }
        }
    }
    Ok(MeasureReport {
        system: s.name().to_string(),
        sample_size: carrier.len(),
        outcomes,
    })
}
