use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Roots;

use crate::tower::Rational;

type TermFn = Arc<dyn Fn(u64) -> Rational + Send + Sync>;

#[derive(Clone)]
enum Rule {
    Terms(TermFn),
    /// `term(n) = start + Σ_{k=1..n} increment(k)`.
    Series { start: Rational, increment: TermFn },
}

/// A deterministic rational sequence, total up to `horizon`.
#[derive(Clone)]
pub struct RationalSequence {
    pub name: String,
    pub note: String,
    pub horizon: u64,
    rule: Rule,
}

impl RationalSequence {
    pub fn from_fn<F>(name: &str, note: &str, horizon: u64, f: F) -> Self
    where
        F: Fn(u64) -> Rational + Send + Sync + 'static,
    {
        RationalSequence {
            name: name.into(),
            note: note.into(),
            horizon,
            rule: Rule::Terms(Arc::new(f)),
        }
    }

    /// Partial sums `start + Σ_{k=1..n} increment(k)`.
    pub fn series<F>(name: &str, note: &str, horizon: u64, start: Rational, increment: F) -> Self
    where
        F: Fn(u64) -> Rational + Send + Sync + 'static,
    {
        RationalSequence {
            name: name.into(),
            note: note.into(),
            horizon,
            rule: Rule::Series {
                start,
                increment: Arc::new(increment),
            },
        }
    }

    pub fn term(&self, n: u64) -> Rational {
        match &self.rule {
            Rule::Terms(f) => f(n),
            Rule::Series { start, increment } => {
                (1..=n).fold(start.clone(), |acc, k| &acc + &increment(k))
            }
        }
    }

    /// `term(0), …, term(upto)`.
    pub fn terms(&self, upto: u64) -> Vec<Rational> {
        match &self.rule {
            Rule::Terms(f) => (0..=upto).map(|n| f(n)).collect(),
            Rule::Series { start, increment } => {
                let mut out = Vec::with_capacity(upto as usize + 1);
                let mut acc = start.clone();
                out.push(acc.clone());
                for k in 1..=upto {
                    acc = &acc + &increment(k);
                    out.push(acc.clone());
                }
                out
            }
        }
    }

    /// `term(n + 1) − term(n)`.
    pub fn gap(&self, n: u64) -> Rational {
        match &self.rule {
            Rule::Terms(f) => &f(n + 1) - &f(n),
            Rule::Series { increment, .. } => increment(n + 1),
        }
    }
}

impl fmt::Debug for RationalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalSequence({}, horizon {})", self.name, self.horizon)
    }
}

/// `p_n / 10^n` with `p_n = max{a ∈ ℕ : a² < 2·10^(2n)}`.
pub fn sqrt2_seq(n: u32) -> Rational {
    let target = BigUint::from(2u32) * BigUint::from(10u32).pow(2 * n);
    let mut p = target.sqrt();
    if &p * &p == target {
        p -= 1u32;
    }
    Rational::decimal(p.into(), n)
}

pub fn sqrt2_sequence() -> RationalSequence {
    RationalSequence::from_fn(
        "sqrt2_seq",
        "p_n/10^n, p_n = max{a : a^2 < 2*10^(2n)}",
        60,
        |n| sqrt2_seq(n as u32),
    )
}

/// `H_n = 1 + 1/2 + … + 1/n`, `H_0 = 0`.
pub fn harmonic_sequence() -> RationalSequence {
    RationalSequence::series(
        "harmonic",
        "H_n = 1 + 1/2 + ... + 1/n",
        1 << 20,
        Rational::zero(),
        |k| Rational::ratio(1, k as i64),
    )
}

/// `S_n = Σ_{k=0..n} 1/k!`.
pub fn e_partial_sums() -> RationalSequence {
    RationalSequence::from_fn("e_partial_sums", "S_n = 1 + 1/1! + ... + 1/n!", 200, e_partial_sum)
}

pub fn constant_sequence(c: Rational) -> RationalSequence {
    RationalSequence::from_fn("constant", "c, c, c, ...", u64::MAX, move |_| c.clone())
}

/// `S_n = Σ_{k=0..n} 1/k!` exactly, accumulated over the common denominator `n!`.
pub fn e_partial_sum(n: u64) -> Rational {
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for k in 1..=n {
        num = num * k + 1;
        den *= k;
    }
    Rational::new(num, den).expect("nonzero factorial")
}

/// `H_(2n) − H_n = 1/(n+1) + … + 1/(2n)`.
pub fn harmonic_gap(n: u64) -> Rational {
    (n + 1..=2 * n).fold(Rational::zero(), |acc, k| &acc + &Rational::ratio(1, k as i64))
}

/// Outcome of a finite Cauchy audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CauchyVerdict {
    /// All terms with index in `[n, horizon]` lie within `eps` of each other.
    Settled { n: u64, horizon: u64 },
    /// No admissible `N`; the pair spans the widest spread in the audited tail.
    Violation { i: u64, j: u64, gap: Rational, horizon: u64 },
}

/// Searches the least `N ≤ horizon/2` with `|term(i) − term(j)| < eps` for
/// all `N ≤ i, j ≤ horizon`. The bound on `N` keeps at least half the
/// horizon under audit. A finite audit, not a proof of convergence.
pub fn cauchy_check(s: &RationalSequence, eps: &Rational, horizon: u64) -> CauchyVerdict {
    let terms = s.terms(horizon);
    let h = horizon as usize;
    // suffix extrema with their indices
    let mut hi = vec![(terms[h].clone(), h); h + 1];
    let mut lo = hi.clone();
    for i in (0..h).rev() {
        hi[i] = if terms[i] > hi[i + 1].0 { (terms[i].clone(), i) } else { hi[i + 1].clone() };
        lo[i] = if terms[i] < lo[i + 1].0 { (terms[i].clone(), i) } else { lo[i + 1].clone() };
    }
    let last = h / 2;
    if let Some(n) = (0..=last).find(|&n| &(&hi[n].0 - &lo[n].0) < eps) {
        return CauchyVerdict::Settled { n: n as u64, horizon };
    }
    let (a, b) = (lo[last].1, hi[last].1);
    CauchyVerdict::Violation {
        i: a.min(b) as u64,
        j: a.max(b) as u64,
        gap: &hi[last].0 - &lo[last].0,
        horizon,
    }
}

/// Whether all terms with index in `[n, horizon]` lie within `eps` of each other.
pub fn cauchy_holds_from(s: &RationalSequence, eps: &Rational, n: u64, horizon: u64) -> bool {
    let terms = s.terms(horizon);
    let tail = &terms[n as usize..];
    let max = tail.iter().max().expect("non-empty tail");
    let min = tail.iter().min().expect("non-empty tail");
    &(max - min) < eps
}

/// Least `n₀ ≤ horizon/2` with `|term(n+1) − term(n)| < eps` for every
/// `n₀ ≤ n < horizon`; `None` when there is none.
pub fn consecutive_gap_check(s: &RationalSequence, eps: &Rational, horizon: u64) -> Option<u64> {
    let mut n0 = horizon;
    for n in (0..horizon).rev() {
        if &s.gap(n).abs() < eps {
            n0 = n;
        } else {
            break;
        }
    }
    (n0 <= horizon / 2).then_some(n0)
}

/// `p/q` with `q ≤ max_den` and `p² = 2q²`, searched exhaustively.
pub fn rational_sqrt2_search(max_den: u64) -> Option<(u64, u64)> {
    (1..=max_den).find_map(|q| {
        let target = 2 * (q as u128) * (q as u128);
        let p = target.sqrt();
        (p * p == target).then_some((p as u64, q))
    })
}

/// `(p_n/10^n)² < 2 ≤ ((p_n + 1)/10^n)²`, exactly.
pub fn sqrt2_seq_brackets(n: u32) -> bool {
    let t = sqrt2_seq(n);
    let next = &t + &Rational::ulp(n);
    let two = Rational::from(2);
    &t * &t < two && two <= &next * &next
}
