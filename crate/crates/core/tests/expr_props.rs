mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use reals_core::expr::{eval, parse, Expr, Literal};
use reals_core::tower::{rat_to_periodic, Rational};

fn literal() -> impl Strategy<Value = Literal> {
    prop_oneof![
        (0u64..10_000).prop_map(|n| Literal::Integer(BigUint::from(n))),
        (0i64..10_000, 2i64..500).prop_map(|(n, d)| Literal::Decimal(rat_to_periodic(&Rational::ratio(n, d)))),
        (0u64..10_000, 1u64..500).prop_map(|(n, d)| Literal::Fraction(n.into(), d.into())),
    ]
    .prop_map(|l| l.canonical())
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![4 => literal().prop_map(Expr::Lit), 1 => Just(Expr::E)];
    leaf.prop_recursive(5, 40, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            inner.clone().prop_map(move |x| Expr::Star(b(x))),
            inner.clone().prop_map(move |x| Expr::Sqrt(b(x))),
            (1u32..6, inner.clone()).prop_map(move |(k, x)| Expr::Root(k, b(x))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner).prop_map(move |(x, y)| Expr::Div(b(x), b(y))),
        ]
    })
}

/// Rational-only trees: literals, sign changes, `+ - *`.
fn rational_expr() -> impl Strategy<Value = Expr> {
    literal().prop_map(Expr::Lit).prop_recursive(4, 20, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            inner.clone().prop_map(move |x| Expr::Star(b(x))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
        ]
    })
}

fn value(e: &Expr) -> Rational {
    match e {
        Expr::Lit(l) => l.value().unwrap(),
        Expr::Neg(x) | Expr::Star(x) => -value(x),
        Expr::Add(a, b) => &value(a) + &value(b),
        Expr::Sub(a, b) => &value(a) - &value(b),
        Expr::Mul(a, b) => &value(a) * &value(b),
        other => panic!("not rational: {other:?}"),
    }
}

proptest! {
    #![proptest_config(common::seeded(10_000))]

    #[test]
    fn parse_inverts_print(e in expr()) {
        let text = e.to_string();
        let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }
}

proptest! {
    #![proptest_config(common::seeded(500))]

    #[test]
    fn rational_trees_evaluate_exactly(e in rational_expr()) {
        let want = value(&e);
        let report = eval(&e, 20, 120).unwrap();
        prop_assert!(report.exact);
        prop_assert_eq!(report.readout.negative, want.is_negative());
    }

    // Noise in literals (`1.4(9)`, `4/2`, `0.50`) is removed by the parser.
    #[test]
    fn parsing_canonicalizes_literals(n in 0i64..10_000, d in 1i64..500) {
        let r = Rational::ratio(n, d);
        let frac = format!("{}/{}", n * 3, d * 3);
        prop_assert_eq!(parse(&frac).unwrap(), parse(&r.to_string()).unwrap());
        let dec = rat_to_periodic(&r).to_string();
        prop_assert_eq!(parse(&dec).unwrap().to_string(), Expr::Lit(Literal::Decimal(rat_to_periodic(&r)).canonical()).to_string());
    }
}
