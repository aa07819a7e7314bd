//! Worked examples from analysis, run as finite audits with exact rationals.
//!
//! Every verdict here is about a stated horizon; none is a proof. The Abel
//! series demo is the one floating-point computation and says so.

mod abel;
mod constants;
mod demos;
mod limits;
mod sequences;

pub use abel::{abel_demo, abel_jump, pi, AbelJump, PI_30};
pub use constants::{
    e_enclosure, e_real, gamma_enclosure, gamma_enclosure_with, harmonic_number, ln_enclosure,
    ln_enclosure_with_budget, GAMMA_LN_WIDTH, LN_TERM_BUDGET,
};
pub use demos::{run_demo, DemoReport, DEMOS};
pub use limits::{monotone_bounded_limit, LimitReport, NEIGHBORHOOD_DEPTH};
pub use sequences::{
    cauchy_check, cauchy_holds_from, consecutive_gap_check, constant_sequence, e_partial_sum,
    e_partial_sums, harmonic_gap, harmonic_sequence, rational_sqrt2_search, sqrt2_seq,
    sqrt2_seq_brackets, sqrt2_sequence, CauchyVerdict, RationalSequence,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::RealError;
    use crate::sup::{named_oracle, supremum};
    use crate::tower::Rational;

    #[test]
    fn sqrt2_seq_examples() {
        assert_eq!(sqrt2_seq(0), Rational::one());
        assert_eq!(sqrt2_seq(1), Rational::ratio(14, 10));
        assert_eq!(sqrt2_seq(4), Rational::ratio(14142, 10000));
        // brute force p_1
        assert_eq!((0..=20).filter(|a| a * a < 200).max(), Some(14));
        assert!((0..=40).all(sqrt2_seq_brackets));
    }

    #[test]
    fn sqrt2_seq_matches_the_supremum() {
        let res = supremum(named_oracle("sqrt:2").unwrap()).unwrap();
        for n in 0..=12 {
            assert_eq!(sqrt2_seq(n), res.truncate(n).unwrap());
        }
    }

    #[test]
    fn cauchy_examples() {
        let s = sqrt2_sequence();
        let eps = Rational::ulp(3);
        assert_eq!(cauchy_check(&s, &eps, 20), CauchyVerdict::Settled { n: 3, horizon: 20 });
        assert!(cauchy_holds_from(&s, &eps, 4, 20));
        let c = constant_sequence(Rational::ratio(2, 3));
        assert_eq!(cauchy_check(&c, &eps, 10), CauchyVerdict::Settled { n: 0, horizon: 10 });
        match cauchy_check(&harmonic_sequence(), &Rational::ratio(1, 2), 2048) {
            CauchyVerdict::Violation { i, j, gap, .. } => {
                assert_eq!((i, j), (1024, 2048));
                assert_eq!(gap, harmonic_gap(1024));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn harmonic_gap_examples() {
        assert_eq!(harmonic_gap(1), Rational::ratio(1, 2));
        assert_eq!(harmonic_gap(2), Rational::ratio(7, 12));
        assert!(harmonic_gap(64) >= Rational::ratio(1, 2));
        let h = harmonic_sequence();
        assert_eq!(&h.term(128) - &h.term(64), harmonic_gap(64));
    }

    #[test]
    fn consecutive_gap_examples() {
        let h = harmonic_sequence();
        assert_eq!(consecutive_gap_check(&h, &Rational::ratio(1, 100), 1000), Some(100));
        assert_eq!(consecutive_gap_check(&sqrt2_sequence(), &Rational::ulp(2), 60), Some(2));
        let c = constant_sequence(Rational::one());
        assert_eq!(consecutive_gap_check(&c, &Rational::ulp(2), 60), Some(0));
        assert_eq!(consecutive_gap_check(&h, &Rational::ratio(1, 100), 150), None);
    }

    #[test]
    fn e_enclosures() {
        let ten = e_enclosure(10);
        assert_eq!(ten.width(), Rational::ratio(1, 36_288_000));
        // both ends read 2.7182818… to seven places
        assert_eq!(ten.lo.floor_scaled(7), 27_182_818.into());
        assert_eq!(ten.hi.floor_scaled(7), 27_182_818.into());
        assert_eq!(e_enclosure(1), crate::real::Interval::new(Rational::from(2), Rational::from(3)));
        for n in 1..=30 {
            assert!(e_enclosure(n).contains_interval(&e_enclosure(n + 1)), "n={n}");
        }
    }

    #[test]
    fn ln_bounds() {
        let w = Rational::ulp(30);
        let ln2 = ln_enclosure(&Rational::from(2), &w).unwrap();
        assert!(ln2.width() <= w);
        // ln 2 = 0.693147180559945309417232121458...
        let lo = Rational::decimal(69_314_718_055_994_530_941_723_212_145u128.into(), 29);
        let hi = Rational::decimal(69_314_718_055_994_530_941_723_212_146u128.into(), 29);
        assert!(crate::real::Interval::new(lo, hi).contains_interval(&ln2));
        let ln1 = ln_enclosure(&Rational::one(), &w).unwrap();
        assert!(ln1.contains(&Rational::zero()));
        let half = ln_enclosure(&Rational::ratio(1, 2), &w).unwrap();
        assert!(half.overlaps(&ln2.neg()));
        assert!(ln_enclosure(&Rational::zero(), &w).is_err());
        let short = ln_enclosure_with_budget(&Rational::from(3), &w, 3);
        assert!(matches!(short, Err(RealError::PrecisionShortfall(_))));
    }

    #[test]
    fn gamma_enclosures() {
        let g50 = gamma_enclosure(50).unwrap();
        assert!(g50.width() < Rational::ratio(2, 100));
        assert!(g50.contains(&Rational::ratio(5772, 10000)));
        let g2 = gamma_enclosure(2).unwrap();
        assert!(g2.contains(&Rational::ratio(5772, 10000)));
        assert!(g2.width() < Rational::ratio(41, 100));
        let mut prev = g2;
        for n in 3..=100 {
            let g = gamma_enclosure(n).unwrap();
            assert!(prev.contains_interval(&g), "n={n}");
            prev = g;
        }
        assert!(gamma_enclosure(1).is_err());
    }

    #[test]
    fn monotone_limits() {
        let r = monotone_bounded_limit(&sqrt2_sequence(), &Rational::from(2), 40, 10).unwrap();
        assert_eq!(r.readout.normalized(), "1.4142135623");
        assert!(r.neighborhoods_entered());
        let r = monotone_bounded_limit(&constant_sequence(Rational::ratio(1, 2)), &Rational::one(), 20, 4)
            .unwrap();
        assert_eq!(r.readout.normalized(), "0.5000");
        let r = monotone_bounded_limit(&e_partial_sums(), &Rational::from(3), 40, 5).unwrap();
        assert_eq!(r.readout.normalized(), "2.71828");
        assert!(r.neighborhoods_entered());

        let down = RationalSequence::from_fn("down", "1/(n+1)", 10, |n| Rational::ratio(1, n as i64 + 1));
        assert!(matches!(
            monotone_bounded_limit(&down, &Rational::one(), 10, 3),
            Err(RealError::AuditFailed(_))
        ));
    }

    #[test]
    fn abel_sums() {
        assert_eq!(abel_demo(0.0, 1000), 0.0);
        let j = abel_jump(0.01, 100_000);
        assert!((j.below - j.expected).abs() < 0.01);
        assert!((j.above + j.expected).abs() < 0.01);
        assert!(j.below > 0.0 && j.above < 0.0);
    }

    #[test]
    fn no_rational_root_of_two() {
        assert_eq!(rational_sqrt2_search(1000), None);
    }

    #[test]
    fn demos_run() {
        assert_eq!(run_demo("harmonic-gap", Some(1)).unwrap().lines, vec!["1/2"]);
        for (name, _, _) in DEMOS {
            let small = match *name {
                "abel" => Some(1000),
                "cauchy-harmonic" => Some(256),
                _ => None,
            };
            let r = run_demo(name, small).unwrap();
            assert!(!r.lines.is_empty(), "{name}");
        }
        assert!(matches!(run_demo("weierstrass", None), Err(RealError::Parse { .. })));
    }
}
