use std::fmt;

use num_bigint::BigUint;

use super::ast::{Expr, Literal};
use crate::error::RealError;
use crate::tower::{Natural, PeriodicDecimal};

/// Syntax error with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for SyntaxError {}

impl From<SyntaxError> for RealError {
    fn from(e: SyntaxError) -> Self {
        RealError::Parse {
            kind: "expression",
            text: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Literal),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(_) => "number".into(),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "end of input".into(),
        }
    }

    fn starts_primary(&self) -> bool {
        match self {
            Tok::Num(_) | Tok::LParen => true,
            Tok::Ident(s) => matches!(s.as_str(), "sqrt" | "root" | "e"),
            _ => false,
        }
    }
}

const FACTOR: &[&str] = &["number", "'('", "'sqrt'", "'root'", "'e'", "'-'"];

fn digits_at(b: &[u8], mut i: usize) -> usize {
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    i
}

fn digit_vec(s: &[u8]) -> Vec<u8> {
    s.iter().map(|c| c - b'0').collect()
}

fn uint(s: &[u8]) -> BigUint {
    BigUint::parse_bytes(s, 10).expect("ascii digits")
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            let int_end = digits_at(b, i);
            let int = &b[i..int_end];
            i = int_end;
            if b.get(i) == Some(&b'.') {
                let pre_end = digits_at(b, i + 1);
                let pre = &b[i + 1..pre_end];
                i = pre_end;
                let mut period: &[u8] = &[];
                if b.get(i) == Some(&b'(') {
                    let per_end = digits_at(b, i + 1);
                    if per_end == i + 1 || b.get(per_end) != Some(&b')') {
                        return Err(SyntaxError {
                            offset: per_end,
                            expected: vec!["digits", "')'"],
                            found: found_at(text, per_end),
                        });
                    }
                    period = &b[i + 1..per_end];
                    i = per_end + 1;
                } else if pre.is_empty() {
                    return Err(SyntaxError {
                        offset: i,
                        expected: vec!["digits", "'('"],
                        found: found_at(text, i),
                    });
                }
                let d = PeriodicDecimal::normalize_nines(
                    false,
                    Natural::from(uint(int)),
                    digit_vec(pre),
                    digit_vec(period),
                )
                .expect("ascii digits");
                Tok::Num(Literal::Decimal(d))
            } else if b.get(i) == Some(&b'/') && b.get(i + 1).is_some_and(u8::is_ascii_digit) {
                let den_end = digits_at(b, i + 1);
                let den = &b[i + 1..den_end];
                i = den_end;
                Tok::Num(Literal::Fraction(uint(int), uint(den)))
            } else {
                Tok::Num(Literal::Integer(uint(int)))
            }
        } else if c.is_ascii_alphabetic() {
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            Tok::Ident(text[start..i].to_string())
        } else {
            i += 1;
            match c {
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                b'*' => Tok::Star,
                b'/' => Tok::Slash,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b',' => Tok::Comma,
                _ => {
                    return Err(SyntaxError {
                        offset: start,
                        expected: FACTOR.to_vec(),
                        found: found_at(text, start),
                    })
                }
            }
        };
        out.push((start, tok));
    }
    out.push((b.len(), Tok::End));
    Ok(out)
}

fn found_at(text: &str, offset: usize) -> String {
    match text[offset..].chars().next() {
        Some(c) => format!("'{c}'"),
        None => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> SyntaxError {
        SyntaxError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    /// `*` is multiplication only when a primary follows; otherwise the
    /// factor rule already consumed it as a postfix star.
    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let p = self.primary()?;
        if *self.peek() == Tok::Star && !self.peek_at(1).starts_primary() {
            self.bump();
            return Ok(Expr::Star(Box::new(p)));
        }
        Ok(p)
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().clone() {
            Tok::Num(l) => {
                self.bump();
                Ok(Expr::Lit(l.canonical()))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "e" => {
                    self.bump();
                    Ok(Expr::E)
                }
                "sqrt" => {
                    self.bump();
                    self.expect(Tok::LParen, "'('")?;
                    let e = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(Expr::Sqrt(Box::new(e)))
                }
                "root" => {
                    self.bump();
                    self.expect(Tok::LParen, "'('")?;
                    let k = match self.peek() {
                        Tok::Num(Literal::Integer(k)) => u32::try_from(k.clone()).ok().filter(|&k| k >= 1),
                        _ => None,
                    }
                    .ok_or_else(|| self.error(&["root index (natural number >= 1)"]))?;
                    self.bump();
                    self.expect(Tok::Comma, "','")?;
                    let e = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(Expr::Root(k, Box::new(e)))
                }
                _ => Err(self.error(FACTOR)),
            },
            _ => Err(self.error(FACTOR)),
        }
    }
}

/// Parses an expression. Literals come back in canonical form, so
/// `1.4(9)` is the literal `1.5`.
pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "'/'", "end of input"]));
    }
    Ok(e)
}
