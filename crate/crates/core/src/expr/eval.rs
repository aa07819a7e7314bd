use super::ast::Expr;
use crate::arithmetic::{
    interval_add, interval_div, interval_mul, interval_neg, interval_root, interval_sub,
};
use crate::error::Result;
use crate::gallery::e_real;
use crate::real::{rational_digits, signed_digits, DigitReadout, Enclosure, SignNotation};

/// Result of evaluating an expression to `n` digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalReport {
    pub readout: DigitReadout,
    /// The value is an exactly known rational.
    pub exact: bool,
}

impl EvalReport {
    pub fn render(&self, notation: SignNotation) -> String {
        self.readout.render(notation)
    }

    /// First undecided position, if any.
    pub fn indeterminate_at(&self) -> Option<usize> {
        self.readout.indeterminate_at
    }

    pub fn precision_used(&self) -> u32 {
        self.readout.precision_used
    }
}

/// Builds the enclosure of an expression. Literals stay exact; operations go
/// through interval arithmetic. Divisors must separate from zero by `cap`.
pub fn enclose(e: &Expr, cap: u32) -> Result<Enclosure> {
    Ok(match e {
        Expr::Lit(l) => Enclosure::from_rational(l.value()?),
        Expr::E => e_real(),
        Expr::Neg(x) | Expr::Star(x) => interval_neg(&enclose(x, cap)?),
        Expr::Add(a, b) => interval_add(&enclose(a, cap)?, &enclose(b, cap)?),
        Expr::Sub(a, b) => interval_sub(&enclose(a, cap)?, &enclose(b, cap)?),
        Expr::Mul(a, b) => interval_mul(&enclose(a, cap)?, &enclose(b, cap)?),
        Expr::Div(a, b) => interval_div(&enclose(a, cap)?, &enclose(b, cap)?, cap)?,
        Expr::Sqrt(x) => interval_root(&enclose(x, cap)?, 2)?,
        Expr::Root(k, x) => interval_root(&enclose(x, cap)?, *k)?,
    })
}

/// The first `n` digits of `e`, escalating precision up to `cap`.
///
/// Exactly known rationals print in their shortest form. A value whose sign
/// is still open at the cap prints its digits followed by `?`.
pub fn eval(e: &Expr, n: usize, cap: u32) -> Result<EvalReport> {
    let x = enclose(e, cap)?;
    if let Some(r) = x.exact() {
        return Ok(EvalReport {
            readout: rational_digits(r, n),
            exact: true,
        });
    }
    let readout = signed_digits(&x, n, cap)?;
    Ok(EvalReport {
        readout,
        exact: false,
    })
}

/// [`eval`] rendered with the given notation.
pub fn eval_to_string(e: &Expr, n: usize, cap: u32, notation: SignNotation) -> Result<String> {
    Ok(eval(e, n, cap)?.render(notation))
}
