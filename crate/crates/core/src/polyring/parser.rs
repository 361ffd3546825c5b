//! Recursive-descent parser for polynomial expressions over the rationals.
//!
//! Grammar (whitespace insignificant):
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := identifier | number | '(' expr ')' | '-' factor
//! number := integer ('/' positive-integer)?
//! ```
//! Multiplication is always explicit (`2*x1`, never `2x1`). Identifiers
//! must be declared in the ring; anything else is a positioned error.

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::{Int, Rat};
use num_traits::Zero;
use std::str::FromStr;
use std::sync::Arc;

/// Exponents above this bound are rejected to keep dense exponent vectors
/// and term counts sane; every computation in this crate stays far below it.
const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(Int),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> u8 {
        let b = self.src[self.pos];
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        b
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let (line, col) = (self.line, self.col);
            let b = self.src[self.pos];
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'+' => {
                    self.bump();
                    out.push((Tok::Plus, line, col));
                }
                b'-' => {
                    self.bump();
                    out.push((Tok::Minus, line, col));
                }
                b'*' => {
                    self.bump();
                    out.push((Tok::Star, line, col));
                }
                b'^' => {
                    self.bump();
                    out.push((Tok::Caret, line, col));
                }
                b'/' => {
                    self.bump();
                    out.push((Tok::Slash, line, col));
                }
                b'(' => {
                    self.bump();
                    out.push((Tok::LParen, line, col));
                }
                b')' => {
                    self.bump();
                    out.push((Tok::RParen, line, col));
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.bump();
                    }
                    if self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphabetic() || self.src[self.pos] == b'_')
                    {
                        return Err(self.err(
                            "number immediately followed by an identifier; multiplication must be explicit (write `2*x`)",
                        ));
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let n = Int::from_str(text)
                        .map_err(|e| self.err(format!("invalid integer literal: {e}")))?;
                    out.push((Tok::Num(n), line, col));
                }
                b if b.is_ascii_alphabetic() || b == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.bump();
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
                    out.push((Tok::Ident(text), line, col));
                }
                other => {
                    return Err(self.err(format!("unexpected character {:?}", other as char)));
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'r> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'r Arc<Ring>,
    end_line: usize,
    end_col: usize,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse { line, col, msg: msg.into() }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err_here(format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial<Rat>> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.checked_add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.checked_sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<Rat>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<Rat>> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.next() {
                Some(Tok::Num(n)) => n,
                _ => return Err(self.err_here("expected a natural-number exponent after '^'")),
            };
            use num_traits::ToPrimitive;
            let e = e
                .to_u32()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| self.err_here(format!("exponent exceeds limit {MAX_EXPONENT}")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial<Rat>> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Polynomial::var(self.ring, i),
                    None => Err(self.err_here(format!(
                        "unknown variable `{name}` (ring is {})",
                        self.ring
                    ))),
                }
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                // optionally a rational literal p/q with q a positive integer
                if self.peek() == Some(&Tok::Slash) {
                    let save = self.pos;
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            return Ok(Polynomial::constant(self.ring, Rat::new(n, d)));
                        }
                        Some(Tok::Num(_)) => {
                            return Err(self.err_here("zero denominator in rational literal"));
                        }
                        _ => {
                            // not a literal after all (e.g. `3/(…)` is not allowed)
                            self.pos = save;
                            return Err(self.err_here(
                                "`/` is only allowed in a rational literal `p/q` with integer q",
                            ));
                        }
                    }
                }
                Ok(Polynomial::constant(self.ring, Rat::from_integer(n)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(&Tok::RParen, "closing `)`")?;
                Ok(e)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(other) => Err(self.err_here(format!("unexpected token {other:?}"))),
            None => Err(self.err_here("unexpected end of input")),
        }
    }
}

/// Parse `src` as a polynomial over `ring` with rational coefficients.
pub fn parse_poly(src: &str, ring: &Arc<Ring>) -> Result<Polynomial<Rat>> {
    let lx = Lexer::new(src);
    let end_line = 1 + src.bytes().filter(|&b| b == b'\n').count();
    let end_col = src.len() - src.rfind('\n').map(|i| i + 1).unwrap_or(0) + 1;
    let toks = lx.tokens()?;
    let mut p = Parser { toks, pos: 0, ring, end_line, end_col };
    if p.peek().is_none() {
        return Err(p.err_here("empty polynomial expression"));
    }
    let poly = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err_here("trailing input after polynomial expression"));
    }
    Ok(poly)
}
