//! Text syntax: identifiers, exact scalar literals, `+ - * ^` and parentheses.
//!
//! Implicit multiplication is rejected. Errors carry the byte offset of the offending token.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::polynomial::Polynomial;
use super::ring::PolyRing;

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn ident_cont(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b'\''
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn describe(&self, at: usize) -> String {
        match self.src[at..].chars().next() {
            Some(c) => format!("unexpected `{c}`"),
            None => "unexpected end of input".to_string(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b) if ident_start(b) || b.is_ascii_digit() || b == b'(' => {
                    return Err(err(self.pos, "implicit multiplication is not allowed"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected a non-negative integer exponent"));
        }
        let e: u32 = self.src[start..self.pos]
            .parse()
            .map_err(|_| err(start, "exponent too large"))?;
        if self.peek() == Some(b'^') {
            return Err(err(
                self.pos,
                "chained exponents are ambiguous; use parentheses",
            ));
        }
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(err(self.pos, "unexpected end of input")),
        };
        let b = self.bytes[start];
        if b == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(err(
                    self.pos,
                    format!("expected `)`, {}", self.describe(self.pos)),
                ));
            }
            self.pos += 1;
            return Ok(inner);
        }
        if b.is_ascii_digit() {
            let num: BigInt = self
                .digits()
                .parse()
                .map_err(|_| err(start, "invalid integer"))?;
            let den: BigInt = if self.bytes.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                let at = self.pos;
                let d = self.digits();
                if d.is_empty() {
                    return Err(err(at, "expected denominator digits"));
                }
                d.parse().map_err(|_| err(at, "invalid denominator"))?
            } else {
                BigInt::from(1)
            };
            let c = self
                .ring
                .field()
                .from_ratio(&num, &den)
                .map_err(|_| err(start, "zero denominator"))?;
            return Ok(Polynomial::constant(self.ring, c));
        }
        if ident_start(b) {
            while self.pos < self.bytes.len() && ident_cont(self.bytes[self.pos]) {
                self.pos += 1;
            }
            let name = &self.src[start..self.pos];
            return match self.ring.index_of(name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(err(start, format!("unknown variable `{name}`"))),
            };
        }
        Err(err(start, self.describe(start)))
    }
}

/// Parses `text` as a polynomial over `ring`.
pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        src: text,
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(err(p.pos, p.describe(p.pos)));
    }
    Ok(out)
}
