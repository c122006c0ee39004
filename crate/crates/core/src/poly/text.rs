//! Text form of polynomials: `3*q^2*z^-1 - q + 1`.
//!
//! Terms print in descending canonical order joined by ` + ` / ` - `. A
//! factor is an integer or a variable with an optional `^` and a signed
//! integer exponent. Parsing accepts the same grammar with free whitespace
//! and repeated factors (`q*q` is `q^2`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{ExponentVector, LaurentPoly, VarId};
use crate::error::Error;

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, e: &ExponentVector) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    if !c.is_one() || e.is_zero() {
        parts.push(c.to_string());
    }
    for v in VarId::ALL {
        match e.get(v) {
            0 => {}
            1 => parts.push(v.symbol().to_string()),
            k => parts.push(format!("{}^{}", v.symbol(), k)),
        }
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write_monomial(f, &mag, e)?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn exponent(&mut self) -> Result<i32, Error> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let d = self.digits()?;
        let k: i32 = d.parse().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -k } else { k })
    }

    fn term(&mut self) -> Result<(BigInt, ExponentVector), Error> {
        let mut c = BigInt::one();
        let mut e = ExponentVector::ZERO;
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let d = self.digits()?;
                    c *= d.parse::<BigInt>().expect("digits");
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let sym = (b as char).to_string();
                    let v = VarId::from_symbol(&sym)
                        .ok_or_else(|| self.err(format!("unknown variable `{sym}`")))?;
                    self.pos += 1;
                    let k = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    e.0[v.index()] += k;
                }
                _ => return Err(self.err("expected an integer or a variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((c, e));
            }
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, Error> {
        let mut out = LaurentPoly::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (c, e) = self.term()?;
            out.add_term(e, c * sign);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected `+`, `-` or end of input")),
            }
            self.pos += 1;
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}

/// Parses a polynomial literal; panics on malformed input. Meant for
/// fixtures and tests.
pub fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}
