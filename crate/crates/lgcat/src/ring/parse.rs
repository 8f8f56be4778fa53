//! Recursive-descent parser for the polynomial expression grammar:
//! integer and `num/den` rational literals, identifiers, `+ - * ^` with `^`
//! binding tightest, parentheses. Implicit multiplication is rejected.

use std::sync::Arc;

use num::{BigInt, BigRational};

use super::poly::Polynomial;
use super::table::VarTable;
use crate::error::{LgError, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> LgError {
    LgError::Parse { line, col, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let bump = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut i, &mut line, &mut col);
            }
            '+' => {
                out.push(Spanned { tok: Tok::Plus, line: l0, col: c0 });
                bump(&mut i, &mut line, &mut col);
            }
            '-' => {
                out.push(Spanned { tok: Tok::Minus, line: l0, col: c0 });
                bump(&mut i, &mut line, &mut col);
            }
            '*' => {
                out.push(Spanned { tok: Tok::Star, line: l0, col: c0 });
                bump(&mut i, &mut line, &mut col);
            }
            '^' => {
                out.push(Spanned { tok: Tok::Caret, line: l0, col: c0 });
                bump(&mut i, &mut line, &mut col);
            }
            '(' => {
                out.push(Spanned { tok: Tok::LParen, line: l0, col: c0 });
                bump(&mut i, &mut line, &mut col);
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, line: l0, col: c0 });
                bump(&mut i, &mut line, &mut col);
            }
            c if c.is_ascii_digit() => {
                let mut num = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    num.push(chars[i]);
                    bump(&mut i, &mut line, &mut col);
                }
                let mut den = String::new();
                if i < chars.len() && chars[i] == '/' {
                    bump(&mut i, &mut line, &mut col);
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        den.push(chars[i]);
                        bump(&mut i, &mut line, &mut col);
                    }
                    if den.is_empty() {
                        return Err(err(line, col, "expected denominator digits after `/`"));
                    }
                }
                let n: BigInt = num.parse().unwrap();
                let d: BigInt = if den.is_empty() { BigInt::from(1) } else { den.parse().unwrap() };
                if d == BigInt::from(0) {
                    return Err(err(l0, c0, "zero denominator"));
                }
                out.push(Spanned { tok: Tok::Num(BigRational::new(n, d)), line: l0, col: c0 });
            }
            c if c.is_ascii_alphabetic() => {
                let mut id = String::new();
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    id.push(chars[i]);
                    bump(&mut i, &mut line, &mut col);
                }
                out.push(Spanned { tok: Tok::Ident(id), line: l0, col: c0 });
            }
            other => return Err(err(l0, c0, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Parses an expression over the table's variables. A callback resolves
/// identifiers, which lets the graded layer reuse the grammar with odd
/// generators mixed in.
pub struct ExprParser<'a, T> {
    toks: Vec<Spanned>,
    pos: usize,
    pub resolve: Box<dyn Fn(&str) -> Result<T> + 'a>,
    pub constant: Box<dyn Fn(BigRational) -> T + 'a>,
}

impl<'a, T: Clone> ExprParser<'a, T> {
    pub fn new(
        src: &str,
        resolve: impl Fn(&str) -> Result<T> + 'a,
        constant: impl Fn(BigRational) -> T + 'a,
    ) -> Result<Self> {
        Ok(ExprParser { toks: lex(src)?, pos: 0, resolve: Box::new(resolve), constant: Box::new(constant) })
    }

    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn fail_here(&self, msg: &str) -> LgError {
        match self.toks.get(self.pos).or_else(|| self.toks.last()) {
            Some(s) => err(s.line, s.col, msg),
            None => err(1, 1, msg),
        }
    }

    pub fn parse(
        &mut self,
        add: impl Fn(&T, &T) -> T + Copy,
        neg: impl Fn(&T) -> T + Copy,
        mul: impl Fn(&T, &T) -> T + Copy,
        pow: impl Fn(&T, u32) -> T + Copy,
    ) -> Result<T> {
        let v = self.expr(add, neg, mul, pow)?;
        if let Some(s) = self.peek() {
            return Err(err(s.line, s.col, "trailing input"));
        }
        Ok(v)
    }

    fn expr(
        &mut self,
        add: impl Fn(&T, &T) -> T + Copy,
        neg: impl Fn(&T) -> T + Copy,
        mul: impl Fn(&T, &T) -> T + Copy,
        pow: impl Fn(&T, u32) -> T + Copy,
    ) -> Result<T> {
        let mut acc = self.term(add, neg, mul, pow)?;
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Plus => {
                    self.next();
                    let rhs = self.term(add, neg, mul, pow)?;
                    acc = add(&acc, &rhs);
                }
                Tok::Minus => {
                    self.next();
                    let rhs = self.term(add, neg, mul, pow)?;
                    acc = add(&acc, &neg(&rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(
        &mut self,
        add: impl Fn(&T, &T) -> T + Copy,
        neg: impl Fn(&T) -> T + Copy,
        mul: impl Fn(&T, &T) -> T + Copy,
        pow: impl Fn(&T, u32) -> T + Copy,
    ) -> Result<T> {
        let mut acc = self.factor(add, neg, mul, pow)?;
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Star => {
                    self.next();
                    let rhs = self.factor(add, neg, mul, pow)?;
                    acc = mul(&acc, &rhs);
                }
                // Implicit multiplication (two adjacent atoms) is a parse error,
                // caught by the caller loop terminating and `parse` seeing
                // trailing input, or by an explicit check here for clarity:
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    return Err(err(s.line, s.col, "implicit multiplication is not allowed; use `*`"));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(
        &mut self,
        add: impl Fn(&T, &T) -> T + Copy,
        neg: impl Fn(&T) -> T + Copy,
        mul: impl Fn(&T, &T) -> T + Copy,
        pow: impl Fn(&T, u32) -> T + Copy,
    ) -> Result<T> {
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Minus)) {
            self.next();
            let inner = self.factor(add, neg, mul, pow)?;
            return Ok(neg(&inner));
        }
        self.power(add, neg, mul, pow)
    }

    fn power(
        &mut self,
        add: impl Fn(&T, &T) -> T + Copy,
        neg: impl Fn(&T) -> T + Copy,
        mul: impl Fn(&T, &T) -> T + Copy,
        pow: impl Fn(&T, u32) -> T + Copy,
    ) -> Result<T> {
        let base = self.atom(add, neg, mul, pow)?;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
            self.next();
            let e = match self.next() {
                Some(Spanned { tok: Tok::Num(r), line, col }) => {
                    if !r.is_integer() {
                        return Err(err(line, col, "exponent must be a nonnegative integer"));
                    }
                    let n = r.to_integer();
                    if n < BigInt::from(0) || n > BigInt::from(u32::MAX) {
                        return Err(err(line, col, "exponent out of range"));
                    }
                    let digits = n.to_string();
                    digits.parse::<u32>().map_err(|_| err(line, col, "exponent out of range"))?
                }
                _ => return Err(self.fail_here("expected integer exponent after `^`")),
            };
            return Ok(pow(&base, e));
        }
        Ok(base)
    }

    fn atom(
        &mut self,
        add: impl Fn(&T, &T) -> T + Copy,
        neg: impl Fn(&T) -> T + Copy,
        mul: impl Fn(&T, &T) -> T + Copy,
        pow: impl Fn(&T, u32) -> T + Copy,
    ) -> Result<T> {
        match self.next() {
            Some(Spanned { tok: Tok::Num(r), .. }) => Ok((self.constant)(r)),
            Some(Spanned { tok: Tok::Ident(id), line, col }) => {
                (self.resolve)(&id).map_err(|e| match e {
                    LgError::UnknownVariable(n) => err(line, col, format!("unknown variable `{n}`")),
                    other => other,
                })
            }
            Some(Spanned { tok: Tok::LParen, .. }) => {
                let inner = self.expr(add, neg, mul, pow)?;
                match self.next() {
                    Some(Spanned { tok: Tok::RParen, .. }) => Ok(inner),
                    _ => Err(self.fail_here("expected `)`")),
                }
            }
            Some(s) => Err(err(s.line, s.col, "expected a number, identifier, or `(`")),
            None => Err(self.fail_here("unexpected end of input")),
        }
    }
}

/// Parse a polynomial over the given variable table.
pub fn parse_poly(table: &Arc<VarTable>, src: &str) -> Result<Polynomial> {
    let t = table.clone();
    let t2 = table.clone();
    let mut p = ExprParser::new(
        src,
        move |name| Polynomial::var_named(&t, name),
        move |c| Polynomial::constant(&t2, c),
    )?;
    p.parse(|a, b| a + b, |a| -a, |a, b| a * b, |a, n| a.pow(n))
}
