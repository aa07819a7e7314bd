mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use reals_core::tower::{
    archimedean_witness, int_add, int_mul, periodic_to_rat, rat_to_periodic, IntegerPair, Natural,
    Rational,
};

fn pair(a: u64, b: u64) -> IntegerPair {
    IntegerPair::new(Natural::from(a), Natural::from(b))
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

proptest! {
    #![proptest_config(common::seeded(10_000))]

    // Shifting both sides of a pair by the same natural stays in the class.
    #[test]
    fn pair_equivalence_is_a_congruence(
        a in 0u64..1_000_000, b in 0u64..1_000_000, c in 0u64..1_000_000, d in 0u64..1_000_000,
        s in 0u64..1_000_000, t in 0u64..1_000_000,
    ) {
        let (p, p2) = (pair(a, b), pair(a + s, b + s));
        let (q, q2) = (pair(c, d), pair(c + t, d + t));
        prop_assert!(p.equivalent(&p2));
        prop_assert!(int_add(&p, &q).equivalent(&int_add(&p2, &q2)));
        prop_assert!(int_mul(&p, &q).equivalent(&int_mul(&p2, &q2)));
        prop_assert_eq!(int_mul(&p, &q).canonical(), int_mul(&p2, &q2).canonical());
        let want = (BigInt::from(a) - BigInt::from(b)) * (BigInt::from(c) - BigInt::from(d));
        prop_assert_eq!(int_mul(&p, &q).to_bigint(), want);
    }

    #[test]
    fn periodic_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..5_000) {
        let r = rat(n, d);
        let p = rat_to_periodic(&r);
        prop_assert_eq!(periodic_to_rat(&p).unwrap(), r.clone());
        // the printed form parses back to the same representative
        let back: reals_core::PeriodicDecimal = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn archimedean_witness_is_least(xn in 1i64..10_000, xd in 1i64..100, yn in 1i64..10_000, yd in 1i64..100) {
        let (x, y) = (rat(xn, xd), rat(yn, yd));
        let n = archimedean_witness(&x, &y).unwrap();
        let n_rat = Rational::from_natural(&n);
        prop_assert!(x < &n_rat * &y);
        let prev = &n_rat - &Rational::one();
        prop_assert!(x >= &prev * &y);
    }
}

#[test]
fn embeddings_preserve_operations_and_order() {
    for a in 0..100u64 {
        for b in 0..100u64 {
            let (na, nb) = (Natural::from(a), Natural::from(b));
            let (ia, ib) = (IntegerPair::from_natural(na.clone()), IntegerPair::from_natural(nb.clone()));
            assert_eq!(int_add(&ia, &ib).canonical(), IntegerPair::from_natural(&na + &nb));
            assert_eq!(int_mul(&ia, &ib).canonical(), IntegerPair::from_natural(&na * &nb));
            assert_eq!(ia.le(&ib), a <= b);
            let (ra, rb) = (Rational::from_natural(&na), Rational::from_natural(&nb));
            let one = IntegerPair::from_i64(1);
            assert_eq!(Rational::from_pair(&ia, &one).unwrap(), ra);
            assert_eq!(&ra + &rb, Rational::from((a + b) as i64));
            assert_eq!(&ra * &rb, Rational::from((a * b) as i64));
            assert_eq!(ra <= rb, a <= b);
        }
    }
}
