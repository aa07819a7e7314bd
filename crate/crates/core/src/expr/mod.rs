//! Expressions over reals: parsing, printing, evaluation.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := '-' factor | primary ['*']
//! primary := number | '(' expr ')' | 'sqrt' '(' expr ')'
//!          | 'root' '(' nat ',' expr ')' | 'e'
//! number  := int ['.' [digits] ['(' digits ')']] | int '/' int
//! ```
//!
//! A `*` directly after a factor is a star (the formal negative `x*`) unless
//! a primary follows it, in which case it multiplies. `int/int` without
//! spaces is one rational literal; `1 / 2` is a division.

mod ast;
mod eval;
mod parse;
mod print;

pub use ast::{Expr, Literal};
pub use eval::{enclose, eval, eval_to_string, EvalReport};
pub use parse::{parse, SyntaxError};
