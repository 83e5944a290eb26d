//! Text grammar for field elements:
//!
//! ```text
//! elem  := term (('+'|'-') term)*
//! term  := coef ('*'? power)? | power
//! power := 'z' ('^' int)?
//! coef  := int ('/' posint)?
//! ```
//!
//! Whitespace is ignored, a leading sign is accepted on any term, and `z`
//! stands for `ζ_N` with exponents reduced modulo `N`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{CycElem, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src
                .chars()
                .enumerate()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i + 1)
            .unwrap_or_else(|| self.src.chars().count() + 1)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        s.parse().ok()
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let d = self
            .digits()
            .ok_or_else(|| self.error("expected integer exponent"))?;
        let v: i64 = d
            .try_into()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn power(&mut self) -> Result<i64> {
        // caller has consumed 'z'
        if self.eat('^') {
            self.signed_int()
        } else {
            Ok(1)
        }
    }

    fn term(&mut self, n: u32) -> Result<CycElem> {
        let mut negative = false;
        while let Some(c) = self.peek() {
            match c {
                '-' => negative = !negative,
                '+' => {}
                _ => break,
            }
            self.pos += 1;
        }
        let value = match self.peek() {
            Some('z') => {
                self.pos += 1;
                CycElem::zeta_pow(n, self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self
                    .digits()
                    .ok_or_else(|| self.error("expected integer"))?;
                let denom = if self.eat('/') {
                    let d = self
                        .digits()
                        .ok_or_else(|| self.error("expected positive denominator"))?;
                    if d.is_zero() {
                        return Err(Error::ZeroDenominator);
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let coef = CycElem::from_rational(&Rational::new(numer, denom), n);
                let star = self.eat('*');
                if self.eat('z') {
                    &coef * &CycElem::zeta_pow(n, self.power()?)
                } else if star {
                    return Err(self.error("expected 'z' after '*'"));
                } else {
                    coef
                }
            }
            Some(_) => return Err(self.error("unexpected character")),
            None => return Err(self.error("unexpected end of expression")),
        };
        Ok(if negative { -value } else { value })
    }

    fn elem(&mut self, n: u32) -> Result<CycElem> {
        let mut acc = self.term(n)?;
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term(n)?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term(n)?;
                }
                Some(_) => return Err(self.error("expected '+' or '-'")),
            }
        }
    }
}

/// Parse an expression in `Q(ζ_N)`.
pub fn parse_cyc(expr: &str, n: u32) -> Result<CycElem> {
    if n == 0 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "conductor must be positive".into(),
        });
    }
    Parser::new(expr).elem(n)
}
