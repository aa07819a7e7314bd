use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{RealError, Result};
use crate::tower::Rational;

/// "Is `q` an upper bound of the set?" A decidable predicate on rationals.
///
/// Must be monotone (an upper bound stays one when increased) and
/// non-trivial. The engine checks monotonicity on the points it queries.
pub trait BoundOracle: Send + Sync {
    fn is_upper_bound(&self, q: &Rational) -> Result<bool>;
}

/// "Is the object strictly below `q` units?" (`x ≺ q·u`).
pub trait CutOracle: Send + Sync {
    fn exceeds(&self, q: &Rational) -> Result<bool>;
}

impl<T: BoundOracle + ?Sized> BoundOracle for Arc<T> {
    fn is_upper_bound(&self, q: &Rational) -> Result<bool> {
        (**self).is_upper_bound(q)
    }
}

impl<T: CutOracle + ?Sized> CutOracle for Arc<T> {
    fn exceeds(&self, q: &Rational) -> Result<bool> {
        (**self).exceeds(q)
    }
}

/// A closure used as either kind of oracle.
pub struct FnOracle<F>(pub F);

impl<F> BoundOracle for FnOracle<F>
where
    F: Fn(&Rational) -> Result<bool> + Send + Sync,
{
    fn is_upper_bound(&self, q: &Rational) -> Result<bool> {
        (self.0)(q)
    }
}

impl<F> CutOracle for FnOracle<F>
where
    F: Fn(&Rational) -> Result<bool> + Send + Sync,
{
    fn exceeds(&self, q: &Rational) -> Result<bool> {
        (self.0)(q)
    }
}

/// Wraps a total predicate as a [`BoundOracle`].
pub fn bound_oracle<F>(f: F) -> Arc<dyn BoundOracle>
where
    F: Fn(&Rational) -> bool + Send + Sync + 'static,
{
    Arc::new(FnOracle(move |q: &Rational| Ok(f(q))))
}

/// Wraps a total predicate as a [`CutOracle`].
pub fn cut_oracle<F>(f: F) -> Arc<dyn CutOracle>
where
    F: Fn(&Rational) -> bool + Send + Sync + 'static,
{
    Arc::new(FnOracle(move |q: &Rational| Ok(f(q))))
}

/// The bound oracle induced by a cut: `q` is an upper bound of the
/// non-exceeded values exactly when the object is below `q` units.
pub struct InducedBound<C>(pub C);

impl<C: CutOracle> BoundOracle for InducedBound<C> {
    fn is_upper_bound(&self, q: &Rational) -> Result<bool> {
        self.0.exceeds(q)
    }
}

#[derive(Default)]
struct Seen {
    /// Greatest point answered "not an upper bound".
    max_false: Option<Rational>,
    /// Least point answered "upper bound".
    min_true: Option<Rational>,
    queries: u64,
}

/// Records every answer and aborts on a non-monotone one.
pub(crate) struct Checked {
    inner: Arc<dyn BoundOracle>,
    seen: Mutex<Seen>,
}

impl Checked {
    pub(crate) fn new(inner: Arc<dyn BoundOracle>) -> Self {
        Checked {
            inner,
            seen: Mutex::new(Seen::default()),
        }
    }

    pub(crate) fn queries(&self) -> u64 {
        self.seen.lock().unwrap_or_else(|e| e.into_inner()).queries
    }
}

impl BoundOracle for Checked {
    fn is_upper_bound(&self, q: &Rational) -> Result<bool> {
        let answer = self.inner.is_upper_bound(q)?;
        let mut seen = self.seen.lock().unwrap_or_else(|e| e.into_inner());
        seen.queries += 1;
        if answer {
            if let Some(f) = seen.max_false.as_ref().filter(|f| q <= *f) {
                return Err(RealError::OracleInconsistent(format!(
                    "{q} is an upper bound but {f} is not"
                )));
            }
            if seen.min_true.as_ref().is_none_or(|t| q < t) {
                seen.min_true = Some(q.clone());
            }
        } else {
            if let Some(t) = seen.min_true.as_ref().filter(|t| q >= *t) {
                return Err(RealError::OracleInconsistent(format!(
                    "{q} is not an upper bound but {t} is"
                )));
            }
            if seen.max_false.as_ref().is_none_or(|f| q > f) {
                seen.max_false = Some(q.clone());
            }
        }
        Ok(answer)
    }
}

impl fmt::Debug for Checked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seen = self.seen.lock().unwrap_or_else(|e| e.into_inner());
        f.debug_struct("Checked")
            .field("max_false", &seen.max_false)
            .field("min_true", &seen.min_true)
            .field("queries", &seen.queries)
            .finish()
    }
}

/// `q ≥ 0` and `q^k ≥ r`: the upper bounds of `{x ≥ 0 : x^k < r}`.
pub fn nth_root_oracle(r: &Rational, k: u32) -> Result<Arc<dyn BoundOracle>> {
    if r.is_negative() {
        return Err(RealError::Negative(r.to_string()));
    }
    if k == 0 {
        return Err(RealError::NonPositive("root index 0".into()));
    }
    let r = r.clone();
    Ok(bound_oracle(move |q| !q.is_negative() && q.pow(k) >= r))
}

/// Upper bounds of `{x : x < q}` (and of `{q}`): every `p ≥ q`.
pub fn at_least_oracle(q: &Rational) -> Arc<dyn BoundOracle> {
    let q = q.clone();
    bound_oracle(move |p| *p >= q)
}
