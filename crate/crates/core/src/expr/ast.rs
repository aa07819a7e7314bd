use num_bigint::{BigInt, BigUint};

use crate::error::Result;
use crate::tower::{periodic_to_rat, rat_to_periodic, PeriodicDecimal, Rational};

/// A non-negative number literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Literal {
    Integer(BigUint),
    /// `int.pre(per)`, never negative.
    Decimal(PeriodicDecimal),
    /// `num/den`; the denominator may be zero until evaluation.
    Fraction(BigUint, BigUint),
}

impl Literal {
    pub fn value(&self) -> Result<Rational> {
        match self {
            Literal::Integer(n) => Ok(Rational::from(BigInt::from(n.clone()))),
            Literal::Decimal(d) => periodic_to_rat(d),
            Literal::Fraction(p, q) => Rational::new(BigInt::from(p.clone()), BigInt::from(q.clone())),
        }
    }

    /// Integer-valued literals become integers, decimals take their minimal
    /// periodic form and fractions are reduced. A zero denominator is kept.
    pub fn canonical(&self) -> Literal {
        let Ok(v) = self.value() else {
            return self.clone();
        };
        if v.is_integer() {
            return Literal::Integer(v.numer().magnitude().clone());
        }
        match self {
            Literal::Decimal(_) => Literal::Decimal(rat_to_periodic(&v)),
            _ => Literal::Fraction(v.numer().magnitude().clone(), v.denom().magnitude().clone()),
        }
    }
}

/// Expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Lit(Literal),
    /// Euler's number.
    E,
    Neg(Box<Expr>),
    /// The star element `x*`.
    Star(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
    Root(u32, Box<Expr>),
}

impl Expr {
    pub fn int(n: u64) -> Expr {
        Expr::Lit(Literal::Integer(n.into()))
    }

    /// Same tree with every literal in canonical form.
    pub fn canonical(&self) -> Expr {
        let c = |e: &Expr| Box::new(e.canonical());
        match self {
            Expr::Lit(l) => Expr::Lit(l.canonical()),
            Expr::E => Expr::E,
            Expr::Neg(x) => Expr::Neg(c(x)),
            Expr::Star(x) => Expr::Star(c(x)),
            Expr::Add(a, b) => Expr::Add(c(a), c(b)),
            Expr::Sub(a, b) => Expr::Sub(c(a), c(b)),
            Expr::Mul(a, b) => Expr::Mul(c(a), c(b)),
            Expr::Div(a, b) => Expr::Div(c(a), c(b)),
            Expr::Sqrt(x) => Expr::Sqrt(c(x)),
            Expr::Root(k, x) => Expr::Root(*k, c(x)),
        }
    }
}
