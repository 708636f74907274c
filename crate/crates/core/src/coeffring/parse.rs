//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: sums and differences of products of powers, with parentheses,
//! integer and `p/q` literals, and variables named by the ring.

use num_bigint::BigInt;

use super::poly::Poly;
use super::rational::Rational;
use super::ring::RingRef;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: String = chars[start..i].iter().collect();
                let num: BigInt = num.parse().map_err(|e| Error::Parse(format!("{e}")))?;
                let n = out.len();
                let after_caret =
                    out.last() == Some(&Tok::Caret) || (n >= 2 && out[n - 1] == Tok::Minus && out[n - 2] == Tok::Caret);
                if after_caret {
                    let small = i64::try_from(num.clone()).map_err(|_| Error::Parse("exponent too large".into()))?;
                    out.push(Tok::Int(small));
                    continue;
                }
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let s2 = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let den: String = chars[s2..i].iter().collect();
                    let den: BigInt = den.parse().map_err(|e| Error::Parse(format!("{e}")))?;
                    if den == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    out.push(Tok::Num(Rational::new(num, den)));
                } else {
                    out.push(Tok::Num(Rational::from_integer(num)));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.product()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let e = match self.bump() {
            Some(Tok::Int(e)) => e,
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        let e = u32::try_from(e).map_err(|_| Error::Parse("exponent too large".into()))?;
        if neg {
            Ok(base.inverse_term()?.pow(e))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.bump() {
            Some(Tok::Num(c)) => Ok(Poly::constant(self.ring, c)),
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Poly::var(self.ring, i)),
                None => Err(Error::Parse(format!("unknown variable {name:?}"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_poly(ring: &RingRef, s: &str) -> Result<Poly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::Ring;

    #[test]
    fn round_trip_examples() {
        let r = Ring::polynomial(&["x1", "x2"]);
        for s in ["0", "1/2", "x1^2 + -1", "-x1*x2 + 3/4*x2", "x1^3 + x1*x2^2 + -2"] {
            let p = parse_poly(&r, s).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn accepts_loose_syntax() {
        let r = Ring::polynomial(&["x", "y"]);
        let p = parse_poly(&r, "(x - y)*(x + y) - -y^2").unwrap();
        assert_eq!(p.to_string(), "x^2");
        let q = parse_poly(&r, "2*(x+1)^2").unwrap();
        assert_eq!(q.to_string(), "2*x^2 + 4*x + 2");
    }

    #[test]
    fn rejects_bad_input() {
        let r = Ring::polynomial(&["x"]);
        for s in ["", "y", "x +", "1/0", "x^", "(x", "x x", "x^-1", "#"] {
            assert!(parse_poly(&r, s).is_err(), "{s:?} should fail");
        }
    }

    #[test]
    fn laurent_inverse_powers() {
        let r = Ring::laurent(&["z"]);
        let p = parse_poly(&r, "z^-2 + 2*z^-1").unwrap();
        assert_eq!(p.to_string(), "2*z^-1 + z^-2");
    }
}
