use std::fmt;

use super::ast::{Expr, Literal};

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Integer(n) => write!(f, "{n}"),
            Literal::Decimal(d) => write!(f, "{d}"),
            Literal::Fraction(p, q) => write!(f, "{p}/{q}"),
        }
    }
}

/// Binding levels: sums, products, factors (prefix minus), primaries.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const FACTOR: u8 = 3;
const PRIMARY: u8 = 4;

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) | Expr::Div(..) => PRODUCT,
        Expr::Neg(_) | Expr::Star(_) => FACTOR,
        _ => PRIMARY,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "(")?;
        write_expr(f, e)?;
        write!(f, ")")
    } else {
        write_expr(f, e)
    }
}

fn write_binary(f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, lvl: u8) -> fmt::Result {
    write_at(f, a, lvl)?;
    write!(f, " {op} ")?;
    // Left associative, so an equal-level right operand needs parentheses.
    // After `*` or `/` a leading minus would read as a postfix star, so a
    // negated operand is parenthesized too.
    match b {
        Expr::Neg(_) if lvl == PRODUCT => {
            write!(f, "(")?;
            write_expr(f, b)?;
            write!(f, ")")
        }
        _ => write_at(f, b, lvl + 1),
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr) -> fmt::Result {
    match e {
        Expr::Lit(l) => write!(f, "{l}"),
        Expr::E => write!(f, "e"),
        Expr::Neg(x) => {
            write!(f, "-")?;
            write_at(f, x, FACTOR)
        }
        Expr::Star(x) => {
            write_at(f, x, PRIMARY)?;
            write!(f, "*")
        }
        Expr::Add(a, b) => write_binary(f, a, "+", b, SUM),
        Expr::Sub(a, b) => write_binary(f, a, "-", b, SUM),
        Expr::Mul(a, b) => write_binary(f, a, "*", b, PRODUCT),
        Expr::Div(a, b) => write_binary(f, a, "/", b, PRODUCT),
        Expr::Sqrt(x) => {
            write!(f, "sqrt(")?;
            write_expr(f, x)?;
            write!(f, ")")
        }
        Expr::Root(k, x) => {
            write!(f, "root({k}, ")?;
            write_expr(f, x)?;
            write!(f, ")")
        }
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self)
    }
}
