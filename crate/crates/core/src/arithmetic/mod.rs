//! Arithmetic on reals: interval operations on enclosures (the production
//! path), the supremum-of-truncations definitions (the reference path), and
//! signed values built from star elements.
//!
//! Subtraction of non-negative reals only appears through [`signed_add`].

mod interval_ops;
mod signed_ops;
mod sup_ops;

pub use interval_ops::{
    exact_root, interval_add, interval_div, interval_inv, interval_mul, interval_neg,
    interval_pow, interval_root, interval_sqrt, interval_sub,
};
pub use signed_ops::{signed_add, signed_inv, signed_mul};
pub use sup_ops::{add_sup, mul_sup, SupDefinedOp, SupKind};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::RealError;
    use crate::real::{
        compare_at, digits_from_enclosure, signed_digits, Comparison, DecimalExpansion, Enclosure,
        Interval, SignNotation, SignedReal,
    };
    use crate::sup::{named_oracle, supremum};
    use crate::tower::Rational;

    fn root(r: i64, k: u32) -> Enclosure {
        interval_root(&Enclosure::from_rational(Rational::from(r)), k).unwrap()
    }

    fn rat(p: i64, q: i64) -> Enclosure {
        Enclosure::from_rational(Rational::ratio(p, q))
    }

    fn sup_expansion(name: &str) -> DecimalExpansion {
        supremum(named_oracle(name).unwrap()).unwrap().expansion().clone()
    }

    fn periodic(s: &str) -> DecimalExpansion {
        DecimalExpansion::from_periodic(&s.parse().unwrap()).unwrap()
    }

    fn text(x: &Enclosure, n: usize) -> String {
        digits_from_enclosure(x, n, 120).unwrap().plain()
    }

    #[test]
    fn interval_examples() {
        let a = Enclosure::from_fn(|_| Ok(Interval::new(Rational::ratio(141, 100), Rational::ratio(142, 100))));
        let b = Enclosure::from_fn(|_| Ok(Interval::new(Rational::ratio(173, 100), Rational::ratio(174, 100))));
        let s = interval_add(&a, &b).bounds(0).unwrap();
        assert!(Interval::new(Rational::ratio(314, 100), Rational::ratio(316, 100)).contains_interval(&s));

        let half = interval_inv(&rat(2, 1), 120).unwrap();
        assert_eq!(half.exact(), Some(&Rational::ratio(1, 2)));
        let inv_root = interval_inv(&root(2, 2), 120).unwrap();
        assert_eq!(text(&inv_root, 6), "0.707106");

        let zero = interval_sub(&root(2, 2), &root(2, 2));
        assert_eq!(interval_inv(&zero, 40).unwrap_err(), RealError::SignUnknown { cap: 40 });
    }

    #[test]
    fn roots_and_products() {
        assert_eq!(text(&root(2, 2), 8), "1.41421356");
        assert_eq!(text(&root(6, 2), 8), "2.44948974");
        assert_eq!(text(&root(5, 3), 10), "1.7099759466");
        assert_eq!(root(1, 5).exact(), Some(&Rational::one()));
        assert_eq!(root(27, 3).exact(), Some(&Rational::from(3)));
        let prod = interval_mul(&root(2, 2), &root(3, 2));
        assert_eq!(text(&prod, 30), text(&root(6, 2), 30));
        let sum = interval_add(&root(2, 2), &root(3, 2));
        assert_eq!(text(&sum, 8), "3.14626436");
        assert!(interval_root(&rat(-1, 1), 2).is_err());
        let neg = interval_neg(&root(2, 2));
        assert!(matches!(interval_root(&neg, 2).unwrap().bounds(3), Err(RealError::Negative(_))));
    }

    #[test]
    fn width_contract_of_operations() {
        let x = root(2, 2);
        let y = root(3, 3);
        let ops = [
            interval_add(&x, &y),
            interval_mul(&x, &y),
            interval_inv(&y, 120).unwrap(),
            interval_root(&x, 3).unwrap(),
            interval_sub(&x, &y),
        ];
        for e in &ops {
            let mut prev: Option<Interval> = None;
            for m in 0..=60 {
                let b = e.bounds(m).unwrap();
                assert!(b.within_ulp(m), "m={m} {b}");
                if let Some(p) = &prev {
                    assert!(p.contains_interval(&b));
                }
                prev = Some(b);
            }
        }
    }

    #[test]
    fn sup_defined_sum_and_product() {
        let r = add_sup(&periodic("0.(3)"), &periodic("0.(6)"), 60).unwrap();
        let out = r.readout(8, 40).unwrap();
        assert_eq!(out.raw(), "0.99999999");
        assert_eq!(out.nines.unwrap().normalized, Rational::one());

        let s2 = sup_expansion("sqrt:2");
        let r = add_sup(&s2, &DecimalExpansion::zero(), 60).unwrap();
        assert_eq!(r.expansion().prefix_string(10).unwrap(), s2.prefix_string(10).unwrap());

        let s3 = sup_expansion("sqrt:3");
        let r = add_sup(&s2, &s3, 60).unwrap();
        assert_eq!(r.expansion().prefix_string(8).unwrap(), "3.14626436");

        let r = mul_sup(&s2, &s3, 80).unwrap();
        let s6 = sup_expansion("sqrt:6");
        assert_eq!(r.expansion().prefix_string(30).unwrap(), s6.prefix_string(30).unwrap());

        let one = DecimalExpansion::from_rational(&Rational::one()).unwrap();
        let r = mul_sup(&s2, &one, 60).unwrap();
        assert_eq!(r.expansion().prefix_string(12).unwrap(), s2.prefix_string(12).unwrap());

        let r = mul_sup(&periodic("1.5"), &periodic("2"), 60).unwrap();
        let out = r.readout(6, 40).unwrap();
        assert_eq!(out.raw(), "2.999999");
        assert_eq!(out.normalized(), "3.000000");
    }

    fn show(x: &SignedReal, n: usize, notation: SignNotation) -> String {
        signed_digits(&x.to_enclosure(), n, 60).unwrap().trim_exact().render(notation)
    }

    fn int(v: i64) -> SignedReal {
        SignedReal::from_rational(&Rational::from(v))
    }

    #[test]
    fn signed_cases() {
        let three = int(3);
        let five = int(5);
        assert_eq!(show(&signed_add(&three, &five.star(), 60).unwrap(), 1, SignNotation::Star), "2*");
        assert_eq!(show(&signed_add(&five, &three.star(), 60).unwrap(), 1, SignNotation::Star), "2");
        let zero = signed_add(&three, &three.star(), 60).unwrap();
        assert!(!zero.is_starred());

        let s2 = SignedReal::new(root(2, 2));
        assert_eq!(signed_add(&s2, &s2.star(), 40).unwrap_err(), RealError::ZeroWithinCap { cap: 40 });
        let sum = interval_add(&s2.to_enclosure(), &s2.star().to_enclosure());
        for m in 0..=40 {
            assert!(sum.bounds(m).unwrap().contains_zero());
        }

        let two = int(2);
        assert_eq!(show(&signed_mul(&two, &three.star()), 1, SignNotation::Star), "6*");
        assert_eq!(show(&signed_mul(&two.star(), &three.star()), 1, SignNotation::Minus), "6");
        let z = signed_mul(&int(0), &s2.star());
        assert_eq!(show(&z, 3, SignNotation::Minus), "0");
        assert!(!signed_mul(&int(0), &three.star()).is_starred());
        assert!(!int(0).star().is_starred());

        let inv = signed_inv(&s2.star(), 60).unwrap();
        assert!(inv.is_starred());
        assert_eq!(show(&inv, 5, SignNotation::Minus), "-0.70710…");
    }

    #[test]
    fn compare_after_translation() {
        let a = root(2, 2);
        let b = rat(3, 2);
        let c = root(7, 3);
        assert_eq!(compare_at(&a, &b, 2).unwrap(), Comparison::Less);
        let v = compare_at(&interval_add(&a, &c), &interval_add(&b, &c), 1).unwrap();
        assert_ne!(v, Comparison::Greater);
    }
}
