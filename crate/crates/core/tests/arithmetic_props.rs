mod common;

use proptest::prelude::*;
use reals_core::arithmetic::{
    add_sup, interval_add, interval_inv, interval_mul, interval_neg, interval_root, mul_sup,
    signed_add, signed_mul,
};
use reals_core::real::{
    compare_at, digits_from_enclosure, signed_digits, Comparison, DecimalExpansion, Enclosure,
    SignedReal,
};
use reals_core::tower::{rat_to_periodic, Rational};

const M: u32 = 30;

/// A value drawn from three constructors: exact rationals, square roots and
/// truncation sequences of periodic decimals.
#[derive(Clone, Debug)]
struct Val {
    kind: u8,
    num: i64,
    den: i64,
    negative: bool,
}

impl Val {
    fn magnitude(&self) -> Enclosure {
        let r = Rational::ratio(self.num, self.den);
        match self.kind {
            0 => Enclosure::from_rational(r),
            1 => interval_root(&Enclosure::from_rational(r), 2).unwrap(),
            _ => {
                let a = DecimalExpansion::from_periodic(&rat_to_periodic(&r)).unwrap();
                Enclosure::from_truncations(move |m| a.truncate(m))
            }
        }
    }

    fn enclosure(&self) -> Enclosure {
        let x = self.magnitude();
        if self.negative { interval_neg(&x) } else { x }
    }
}

fn val() -> impl Strategy<Value = Val> {
    (0u8..3, 0i64..5_000, 1i64..200, any::<bool>())
        .prop_map(|(kind, num, den, negative)| Val { kind, num, den, negative })
}

fn overlap(x: &Enclosure, y: &Enclosure) -> bool {
    x.bounds(M).unwrap().overlaps(&y.bounds(M).unwrap())
}

fn periodic(n: i64, d: i64) -> DecimalExpansion {
    DecimalExpansion::from_periodic(&rat_to_periodic(&Rational::ratio(n, d))).unwrap()
}

fn opaque(a: &DecimalExpansion) -> Enclosure {
    let a = a.clone();
    Enclosure::from_truncations(move |m| a.truncate(m))
}

proptest! {
    #![proptest_config(common::seeded(200))]

    #[test]
    fn field_laws_hold_at_precision(a in val(), b in val(), c in val()) {
        let (x, y, z) = (a.enclosure(), b.enclosure(), c.enclosure());
        let zero = Enclosure::from_rational(Rational::zero());
        let one = Enclosure::from_rational(Rational::one());
        prop_assert!(overlap(&interval_add(&interval_add(&x, &y), &z), &interval_add(&x, &interval_add(&y, &z))));
        prop_assert!(overlap(&interval_mul(&interval_mul(&x, &y), &z), &interval_mul(&x, &interval_mul(&y, &z))));
        prop_assert!(overlap(&interval_add(&x, &y), &interval_add(&y, &x)));
        prop_assert!(overlap(&interval_mul(&x, &y), &interval_mul(&y, &x)));
        prop_assert!(overlap(
            &interval_mul(&x, &interval_add(&y, &z)),
            &interval_add(&interval_mul(&x, &y), &interval_mul(&x, &z)),
        ));
        prop_assert!(overlap(&interval_add(&x, &zero), &x));
        prop_assert!(overlap(&interval_mul(&x, &one), &x));
        prop_assert!(overlap(&interval_add(&x, &interval_neg(&x)), &zero));
        if a.num > 0 {
            let inv = interval_inv(&x, 120).unwrap();
            prop_assert!(interval_mul(&x, &inv).bounds(M).unwrap().contains(&Rational::one()));
        }
    }

    #[test]
    fn translation_keeps_the_order(a in val(), b in val(), c in val(), m in 1u32..25) {
        let (x, y, z) = (a.enclosure(), b.enclosure(), c.enclosure());
        if compare_at(&x, &y, m).unwrap() == Comparison::Less {
            let moved = compare_at(&interval_add(&x, &z), &interval_add(&y, &z), m - 1).unwrap();
            prop_assert_ne!(moved, Comparison::Greater);
        }
    }

    #[test]
    fn double_star_is_invisible(a in val(), b in val()) {
        let x = SignedReal::new(a.magnitude());
        let x = if a.negative { x.star() } else { x };
        let xx = x.star().star();
        let y = SignedReal::new(b.magnitude());
        let show = |s: &SignedReal| signed_digits(&s.to_enclosure(), 12, 80).map(|r| r.render(Default::default()));
        prop_assert_eq!(show(&xx), show(&x));
        prop_assert_eq!(show(&signed_mul(&xx, &y)), show(&signed_mul(&x, &y)));
        let sum = |u: &SignedReal| signed_add(u, &y, 80).and_then(|s| show(&s));
        prop_assert_eq!(sum(&xx), sum(&x));
    }

    // Every emitted digit of the supremum-defined sum and product is
    // consistent with the interval result and with the exact value.
    #[test]
    fn sup_and_interval_arithmetic_agree(
        an in 0i64..100_000, ad in 1i64..1_000, bn in 0i64..100_000, bd in 1i64..1_000, mul in any::<bool>(),
    ) {
        let (a, b) = (periodic(an, ad), periodic(bn, bd));
        let (ra, rb) = (Rational::ratio(an, ad), Rational::ratio(bn, bd));
        let (res, iv, exact) = if mul {
            (mul_sup(&a, &b, 80).unwrap(), interval_mul(&opaque(&a), &opaque(&b)), &ra * &rb)
        } else {
            (add_sup(&a, &b, 80).unwrap(), interval_add(&opaque(&a), &opaque(&b)), &ra + &rb)
        };
        let n = 20;
        let s = res.truncate(n).unwrap();
        let s_hi = &s + &Rational::ulp(n);
        prop_assert!(s <= exact && exact <= s_hi);
        let r = digits_from_enclosure(&iv, n as usize, 120).unwrap();
        let k = r.digits.len() as u32;
        let scaled = r.digits.iter().fold(r.int_part.clone(), |acc, &d| acc * 10 + d);
        let lo = Rational::decimal(scaled, k);
        let hi = &lo + &Rational::ulp(k);
        prop_assert!(lo <= s_hi && s <= hi, "sup digits {} vs interval digits {}", s, lo);
        if let Some(pos) = r.indeterminate_at {
            prop_assert!(exact.on_grid(pos as u32), "undecided at {} but {} is off the grid", pos, exact);
        }
    }
}
