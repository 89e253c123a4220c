//! Text form of polynomials and rational functions.
//!
//! Terms are printed in decreasing lexicographic order, e.g.
//! `(q^{1}t^{-1} - 1) / (t^{1} - 1)`; half-integer exponents print as `c/2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{QTError, QTMonomial, QTPolynomial, QTRational, Rational};

fn fmt_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", fmt_coeff(&a))?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}{}", fmt_coeff(&a), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({}) / ({})", self.numer(), self.denom())
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> QTError {
        QTError::Parse(format!("{} at offset {}", msg, self.pos))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), QTError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn number(&mut self) -> Result<Option<Rational>, QTError> {
        let n = match self.digits() {
            Some(n) => n,
            None => return Ok(None),
        };
        let save = self.pos;
        if self.eat(b'/') {
            if let Some(d) = self.digits() {
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                return Ok(Some(Rational::new(n, d)));
            }
            self.pos = save;
        }
        Ok(Some(Rational::from_integer(n)))
    }

    /// Exponent inside braces, doubled.
    fn exponent2(&mut self) -> Result<i64, QTError> {
        if !self.eat(b'^') {
            return Ok(2);
        }
        let braced = self.eat(b'{');
        let neg = self.eat(b'-');
        let n: i64 = self
            .digits()
            .ok_or_else(|| self.err("expected exponent"))?
            .try_into()
            .map_err(|_| self.err("exponent too large"))?;
        let mut v2 = 2 * n;
        if braced && self.eat(b'/') {
            let d = self.digits().ok_or_else(|| self.err("expected exponent denominator"))?;
            if d != BigInt::from(2) {
                return Err(self.err("exponent denominator must be 2"));
            }
            v2 = n;
        }
        if braced {
            self.expect(b'}')?;
        }
        Ok(if neg { -v2 } else { v2 })
    }

    fn monomial(&mut self) -> Result<Option<QTMonomial>, QTError> {
        let mut m = QTMonomial::ONE;
        let mut any = false;
        loop {
            self.eat(b'*');
            match self.peek() {
                Some(b'q') => {
                    self.pos += 1;
                    m.qexp2 += self.exponent2()?;
                }
                Some(b't') => {
                    self.pos += 1;
                    m.texp2 += self.exponent2()?;
                }
                Some(b's') => {
                    self.pos += 1;
                    let e2 = self.exponent2()?;
                    m = m * QTMonomial::from_doubled(-e2 / 2, e2 / 2);
                    if e2 % 2 != 0 {
                        return Err(self.err("s takes integer exponents"));
                    }
                }
                _ => break,
            }
            any = true;
        }
        Ok(if any { Some(m) } else { None })
    }

    fn term(&mut self) -> Result<(Rational, QTMonomial), QTError> {
        let c = self.number()?;
        let m = self.monomial()?;
        match (c, m) {
            (None, None) => Err(self.err("expected term")),
            (c, m) => Ok((c.unwrap_or_else(Rational::one), m.unwrap_or(QTMonomial::ONE))),
        }
    }

    fn poly(&mut self) -> Result<QTPolynomial, QTError> {
        let mut p = QTPolynomial::zero();
        let mut sign = if self.eat(b'-') { -1 } else { 1 };
        loop {
            let (c, m) = self.term()?;
            p.add_term(m, if sign < 0 { -c } else { c });
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(p)
    }

    fn factor(&mut self) -> Result<QTPolynomial, QTError> {
        if self.eat(b'(') {
            let p = self.poly()?;
            self.expect(b')')?;
            Ok(p)
        } else {
            self.poly()
        }
    }
}

impl FromStr for QTPolynomial {
    type Err = QTError;
    fn from_str(s: &str) -> Result<Self, QTError> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let v = p.poly()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

impl FromStr for QTRational {
    type Err = QTError;
    fn from_str(s: &str) -> Result<Self, QTError> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let num = p.factor()?;
        let den = if p.eat(b'/') { p.factor()? } else { QTPolynomial::one() };
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        QTRational::new(num, den)
    }
}
