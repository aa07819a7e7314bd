use super::abel::{abel_jump, PI_30};
use super::constants::{e_enclosure, gamma_enclosure};
use super::limits::monotone_bounded_limit;
use super::sequences::{
    cauchy_check, consecutive_gap_check, constant_sequence, e_partial_sums, harmonic_gap,
    harmonic_sequence, rational_sqrt2_search, sqrt2_seq, sqrt2_seq_brackets, sqrt2_sequence,
    CauchyVerdict,
};
use crate::error::{RealError, Result};
use crate::real::{rational_digits, SignNotation};
use crate::tower::Rational;

/// Output of a named demo. The first line is the headline value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemoReport {
    pub name: &'static str,
    pub n: u64,
    pub lines: Vec<String>,
}

impl DemoReport {
    pub fn headline(&self) -> &str {
        &self.lines[0]
    }
}

/// `(name, parameter meaning, default)` for every demo.
pub const DEMOS: &[(&str, &str, u64)] = &[
    ("sqrt2-seq", "index n", 4),
    ("sqrt2-irrational", "largest denominator", 1000),
    ("cauchy-sqrt2", "eps = 10^-n", 3),
    ("cauchy-harmonic", "horizon", 2048),
    ("harmonic-gap", "n", 1),
    ("consecutive-gap", "eps = 10^-n", 2),
    ("e-enclosure", "n", 10),
    ("gamma-enclosure", "n", 50),
    ("monotone-limit", "digits", 10),
    ("abel", "terms", 100_000),
];

fn decimal(r: &Rational, places: usize) -> String {
    rational_digits(r, places).render(SignNotation::Minus)
}

fn pow10_rat(k: u64) -> Result<Rational> {
    u32::try_from(k)
        .map(Rational::ulp)
        .map_err(|_| RealError::NonPositive(format!("exponent {k} too large")))
}

/// Runs a demo by name with parameter `n` (or its default).
pub fn run_demo(name: &str, n: Option<u64>) -> Result<DemoReport> {
    let (key, _, default) = DEMOS
        .iter()
        .find(|(k, _, _)| *k == name)
        .ok_or_else(|| RealError::Parse {
            kind: "demo",
            text: name.to_string(),
        })?;
    let n = n.unwrap_or(*default);
    let lines = match *key {
        "sqrt2-seq" => {
            let k = u32::try_from(n).map_err(|_| RealError::NonPositive(n.to_string()))?;
            let t = sqrt2_seq(k);
            vec![
                decimal(&t, k as usize),
                format!("p_{n} = {}", t.floor_scaled(k)),
                format!("(p_{n}/10^{n})^2 < 2 <= ((p_{n}+1)/10^{n})^2: {}", sqrt2_seq_brackets(k)),
            ]
        }
        "sqrt2-irrational" => match rational_sqrt2_search(n) {
            None => vec![format!("no p/q with q <= {n} has p^2 = 2q^2 (exhaustive search)")],
            Some((p, q)) => vec![format!("found {p}/{q}")],
        },
        "cauchy-sqrt2" => {
            let eps = pow10_rat(n)?;
            let horizon = 20.max(2 * n + 2);
            cauchy_lines(cauchy_check(&sqrt2_sequence(), &eps, horizon), &eps)
        }
        "cauchy-harmonic" => {
            let eps = Rational::ratio(1, 2);
            cauchy_lines(cauchy_check(&harmonic_sequence(), &eps, n), &eps)
        }
        "harmonic-gap" => {
            if n == 0 {
                return Err(RealError::NonPositive("harmonic-gap needs n >= 1".into()));
            }
            vec![harmonic_gap(n).to_string()]
        }
        "consecutive-gap" => {
            let eps = pow10_rat(n)?;
            let horizon = 4 * 10u64.saturating_pow(n as u32).min(1 << 20);
            let fmt = |name: &str, v: Option<u64>| match v {
                Some(n0) => format!("{name}: n0 = {n0}"),
                None => format!("{name}: no n0 up to horizon {horizon}"),
            };
            let h = consecutive_gap_check(&harmonic_sequence(), &eps, horizon);
            let s = consecutive_gap_check(&sqrt2_sequence(), &eps, 60);
            let c = consecutive_gap_check(&constant_sequence(Rational::ratio(1, 2)), &eps, 60);
            vec![
                fmt("harmonic", h),
                fmt("sqrt2_seq", s),
                fmt("constant", c),
                format!("eps = {eps}, finite audit"),
                format!("harmonic_gap({}) = {} >= 1/2", n.max(1), decimal(&harmonic_gap(n.max(1)), 6)),
            ]
        }
        "e-enclosure" => {
            let k = u32::try_from(n).ok().filter(|&k| k >= 1)
                .ok_or_else(|| RealError::NonPositive("e-enclosure needs n >= 1".into()))?;
            let iv = e_enclosure(k);
            let places = (k as usize * 2).max(10);
            vec![
                format!("[{}, {}]", decimal(&iv.lo, places), decimal(&iv.hi, places)),
                format!("S_{k} = {}", iv.lo),
                format!("width = {}", iv.width()),
            ]
        }
        "gamma-enclosure" => {
            let iv = gamma_enclosure(n)?;
            vec![
                format!("[{}, {}]", decimal(&iv.lo, 8), decimal(&iv.hi, 8)),
                format!("width < {}", decimal(&iv.width(), 8).trim_end_matches('…')),
                format!("[H_{n} - ln({}), H_{n} - ln({n})], logarithms bounded outward", n + 1),
            ]
        }
        "monotone-limit" => {
            let digits = n as usize;
            let mut lines = Vec::new();
            let cases = [
                (sqrt2_sequence(), Rational::from(2), 40),
                (constant_sequence(Rational::ratio(1, 2)), Rational::one(), 20),
                (e_partial_sums(), Rational::from(3), 40),
            ];
            for (s, bound, horizon) in cases {
                let r = monotone_bounded_limit(&s, &bound, horizon, digits)?;
                lines.push(format!(
                    "{}: sup = {}… (horizon {horizon}), neighborhoods 10^-0..10^-10 entered: {}",
                    s.name,
                    r.readout.normalized(),
                    r.neighborhoods_entered()
                ));
            }
            lines
        }
        "abel" => {
            let j = abel_jump(0.01, n);
            vec![
                format!("x = pi - 0.01: {:.6}", j.below),
                format!("x = pi + 0.01: {:.6}", j.above),
                format!("(pi - 0.01)/2 = {:.6}", j.expected),
                format!("demo, not exact: f64 partial sums of {n} terms, pi = {PI_30}"),
            ]
        }
        _ => unreachable!("listed demo"),
    };
    Ok(DemoReport {
        name: key,
        n,
        lines,
    })
}

fn cauchy_lines(v: CauchyVerdict, eps: &Rational) -> Vec<String> {
    match v {
        CauchyVerdict::Settled { n, horizon } => vec![
            format!("N = {n}"),
            format!("all terms from N to {horizon} within {eps} (finite audit, not a proof)"),
        ],
        CauchyVerdict::Violation { i, j, gap, horizon } => vec![
            format!("violation: i = {i}, j = {j}"),
            format!("|a_{j} - a_{i}| = {} >= {eps}", decimal(&gap, 6)),
            format!("no N <= {} works up to horizon {horizon} (finite audit)", horizon / 2),
        ],
    }
}
