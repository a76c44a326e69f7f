//! Recursive-descent parser for the polynomial text format:
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := integer ['/' positive-integer]
//! factor := 'x' index ['^' positive-integer]
//! ```
//!
//! Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok((start, s))
    }

    fn positive_u32(&mut self, what: &str) -> Result<u32> {
        let (start, s) = self.digits()?;
        match s.parse::<u32>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Error::Parse { pos: start, msg: format!("{what} must be a positive integer") }),
        }
    }

    fn factor(&mut self, n: usize, exps: &mut [u32]) -> Result<()> {
        if !self.eat(b'x') {
            return self.err("expected variable 'x<index>'");
        }
        // index digits must follow the 'x' directly
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected variable index after 'x'");
        }
        let idx_str = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let index: usize = idx_str
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "variable index too large".into() })?;
        if index >= n {
            return Err(Error::VariableOutOfRange { index, n });
        }
        let e = if self.eat(b'^') { self.positive_u32("exponent")? } else { 1 };
        exps[index] = exps[index]
            .checked_add(e)
            .ok_or(Error::Parse { pos: self.pos, msg: "exponent overflow".into() })?;
        Ok(())
    }

    fn term(&mut self, n: usize) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; n];
        let mut coeff = Rational::one();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let (_, num) = self.digits()?;
                let num: BigInt = num.parse().expect("digits parse");
                let den = if self.eat(b'/') {
                    let (start, d) = self.digits()?;
                    let d: BigInt = d.parse().expect("digits parse");
                    if d.is_zero() {
                        return Err(Error::Parse { pos: start, msg: "zero denominator".into() });
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff = Rational::new(num, den);
            }
            Some(b'x') => self.factor(n, &mut exps)?,
            Some(_) => return self.err("expected a coefficient or a variable"),
            None => return self.err("unexpected end of input"),
        }
        while self.eat(b'*') {
            self.factor(n, &mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }
}

/// Parses `text` as a polynomial in `x0 .. x{n-1}`.
pub fn parse_poly(text: &str, n: usize) -> Result<Polynomial> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut negative = cur.eat(b'-');
    loop {
        let (m, c) = cur.term(n)?;
        terms.push((m.into_exponents(), if negative { -c } else { c }));
        if cur.eat(b'+') {
            negative = false;
        } else if cur.eat(b'-') {
            negative = true;
        } else {
            break;
        }
    }
    if cur.peek().is_some() {
        return cur.err("unexpected trailing input");
    }
    Polynomial::from_terms(n, terms)
}
