//! The `compute` expression language.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '{' qt-literal '}' | integer | basis '[' parts ']'
//!          | kernel '(' 'shape' skew ')' | kernel '(' expr ')'
//!          | 'nabla' ['^' int] '(' expr ')' | 'in' '[' basis ']' '(' expr ')'
//!          | 'phi' '(' expr ')' | '(' expr ')'
//! kernel  := ('P' | 'E') '[' int ',' int '/' int ']'
//! ```
//!
//! `P[λ]` is the Macdonald polynomial expanded in monomials, `M[λ]` the
//! normalized basis element. A kernel applied to a shape is evaluated at its
//! box weights; applied to a function it acts as the corresponding operator
//! (negative `k` gives the lowering family).

use std::fmt;

use anyhow::{anyhow, bail, Context, Result};
use mnpieri::hall::{act, HallOperator};
use mnpieri::qt::QTRational;
use mnpieri::shapes::{Partition, SkewShape};
use mnpieri::shuffle::{sym_evaluate, EvaluationPoint, ShuffleKernel};
use mnpieri::sym::{convert, macdonald_P, multiply, nabla, norm_phi, Basis, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(QTRational),
    Sym(SymFunc),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Sym(g) => write!(f, "{g}"),
        }
    }
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Scalar(c) => serde_json::json!({"scalar": c.to_string()}),
            Value::Sym(g) => g.to_json(),
        }
    }

    fn into_sym(self, basis: Basis) -> SymFunc {
        match self {
            Value::Sym(g) => g,
            Value::Scalar(c) => SymFunc::one(basis).scale(&c),
        }
    }
}

pub fn evaluate(src: &str) -> Result<Value> {
    let mut p = Parser { s: src.as_bytes(), i: 0, src };
    let v = p.expr()?;
    p.ws();
    if p.i < p.s.len() {
        bail!("unexpected `{}` at offset {}", &src[p.i..], p.i);
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    src: &'a str,
}

fn combine(a: Value, b: Value, negate: bool) -> Result<Value> {
    let b = match b {
        Value::Scalar(c) if negate => Value::Scalar(-c),
        Value::Sym(g) if negate => Value::Sym(g.scale(&QTRational::from_int(-1))),
        b => b,
    };
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
        (Value::Sym(f), other) | (other, Value::Sym(f)) => {
            let g = other.into_sym(f.basis);
            Value::Sym(f.add(&g)?)
        }
    })
}

fn product(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
        (Value::Scalar(c), Value::Sym(f)) | (Value::Sym(f), Value::Scalar(c)) => Value::Sym(f.scale(&c)),
        (Value::Sym(f), Value::Sym(g)) => Value::Sym(multiply(&f, &g)?),
    })
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            bail!("expected `{}` at offset {}", c as char, self.i)
        }
    }

    fn word(&mut self) -> &str {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_alphabetic() || self.s[self.i] == b'_') {
            self.i += 1;
        }
        &self.src[start..self.i]
    }

    /// Text up to the matching close bracket, brackets nested.
    fn until_close(&mut self, open: u8, close: u8) -> Result<&str> {
        let start = self.i;
        let mut depth = 1;
        while self.i < self.s.len() {
            match self.s[self.i] {
                c if c == open => depth += 1,
                c if c == close => {
                    depth -= 1;
                    if depth == 0 {
                        let t = &self.src[start..self.i];
                        self.i += 1;
                        return Ok(t);
                    }
                }
                _ => {}
            }
            self.i += 1;
        }
        bail!("unclosed `{}`", open as char)
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.i;
        if self.s.get(self.i) == Some(&b'-') {
            self.i += 1;
        }
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        self.src[start..self.i].parse().with_context(|| format!("expected an integer at offset {start}"))
    }

    fn expr(&mut self) -> Result<Value> {
        let mut v = self.term()?;
        loop {
            if self.eat(b'+') {
                v = combine(v, self.term()?, false)?;
            } else if self.eat(b'-') {
                v = combine(v, self.term()?, true)?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut v = self.factor()?;
        while self.eat(b'*') {
            v = product(v, self.factor()?)?;
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<Value> {
        match self.peek() {
            None => bail!("unexpected end of expression"),
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'{') => {
                self.i += 1;
                let lit = self.until_close(b'{', b'}')?;
                let c: QTRational = lit.parse().map_err(|e| anyhow!("bad coefficient `{lit}`: {e}"))?;
                Ok(Value::Scalar(c))
            }
            Some(c) if c.is_ascii_digit() => Ok(Value::Scalar(QTRational::from_int(self.int()?))),
            Some(_) => self.named(),
        }
    }

    fn named(&mut self) -> Result<Value> {
        let at = self.i;
        let w = self.word().to_string();
        match w.as_str() {
            "nabla" => {
                let r = if self.eat(b'^') { self.int()? } else { 1 };
                let f = self.argument()?;
                Ok(Value::Sym(nabla(&f, r)?))
            }
            "in" => {
                self.expect(b'[')?;
                let b: Basis = self.word().parse()?;
                self.expect(b']')?;
                let f = self.argument()?;
                Ok(Value::Sym(convert(&f, b)?))
            }
            "phi" => {
                let f = self.argument()?;
                Ok(Value::Scalar(norm_phi(&f)?))
            }
            "" => bail!("unexpected `{}` at offset {at}", &self.src[at..]),
            name => {
                self.expect(b'[')?;
                let inside = self.until_close(b'[', b']')?.to_string();
                if inside.contains('/') {
                    self.kernel(name, &inside)
                } else {
                    let b: Basis = name.parse()?;
                    let l: Partition = inside.parse().map_err(|e| anyhow!("bad partition `{inside}`: {e}"))?;
                    Ok(Value::Sym(if b == Basis::MacP { macdonald_P(&l)? } else { SymFunc::basis_element(b, l) }))
                }
            }
        }
    }

    fn argument(&mut self) -> Result<SymFunc> {
        self.expect(b'(')?;
        let v = self.expr()?;
        self.expect(b')')?;
        Ok(v.into_sym(Basis::MacM))
    }

    fn kernel(&mut self, family: &str, inside: &str) -> Result<Value> {
        let (k, slope) = inside.split_once(',').ok_or_else(|| anyhow!("kernel needs `k,m/n`, got `{inside}`"))?;
        let (m, n) = slope.split_once('/').ok_or_else(|| anyhow!("bad slope `{slope}`"))?;
        let k: i64 = k.trim().parse().context("bad k")?;
        let m: i64 = m.trim().parse().context("bad m")?;
        let n: usize = n.trim().parse().context("bad n")?;
        if k == 0 {
            bail!("k must be nonzero");
        }
        self.expect(b'(')?;
        let save = self.i;
        if self.word() == "shape" {
            let text = self.until_close(b'(', b')')?.to_string();
            let sh: SkewShape = text.parse().map_err(|e| anyhow!("bad shape `{text}`: {e}"))?;
            let ku = k.unsigned_abs() as usize;
            let ker = match (family, k > 0) {
                ("P", true) => ShuffleKernel::p(ku, m, n)?,
                ("E", true) => ShuffleKernel::e(ku, m, n)?,
                _ => bail!("only P[k,m/n] and E[k,m/n] with k > 0 can be evaluated at a shape"),
            };
            return Ok(Value::Scalar(sym_evaluate(&ker, &EvaluationPoint::from_skew(&sh))?));
        }
        self.i = save;
        let v = self.expr()?;
        self.expect(b')')?;
        let f = v.into_sym(Basis::MacM);
        let ku = k.unsigned_abs() as usize;
        let op = match (family, k > 0) {
            ("P", true) => HallOperator::p(ku, m, n)?,
            ("E", true) => HallOperator::e(ku, m, n)?,
            ("P", false) => HallOperator::p_negative(ku, m, n)?,
            ("E", false) => HallOperator::e_negative(ku, m, n)?,
            _ => bail!("unknown kernel family `{family}`"),
        };
        Ok(Value::Sym(act(&op, &f)?))
    }
}
