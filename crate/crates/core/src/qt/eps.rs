use std::collections::BTreeMap;

use super::{QTError, QTRational};

/// Ratio of two polynomials in an auxiliary variable `ε` over `Q(q,t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsRational {
    /// Coefficients of `ε^0, ε^1, ...`.
    pub num: Vec<QTRational>,
    pub den: Vec<QTRational>,
}

fn trim(v: &mut Vec<QTRational>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

impl EpsRational {
    pub fn new(mut num: Vec<QTRational>, mut den: Vec<QTRational>) -> Result<Self, QTError> {
        trim(&mut num);
        trim(&mut den);
        if den.is_empty() {
            return Err(QTError::DivisionByZero);
        }
        Ok(EpsRational { num, den })
    }

    /// Builds from Laurent polynomials in `ε` given as exponent maps.
    pub fn from_laurent(num: &BTreeMap<i64, QTRational>, den: &BTreeMap<i64, QTRational>) -> Result<Self, QTError> {
        let lo = num.keys().chain(den.keys()).copied().min().unwrap_or(0);
        let dense = |m: &BTreeMap<i64, QTRational>| {
            let hi = m.keys().copied().max().unwrap_or(lo);
            let mut v = vec![QTRational::zero(); (hi - lo + 1) as usize];
            for (e, c) in m {
                v[(e - lo) as usize] = c.clone();
            }
            v
        };
        Self::new(dense(num), dense(den))
    }

    /// Multiplies numerator and denominator by `(ε - 1)^k`.
    pub fn times_eps_minus_one(&self, k: usize) -> Self {
        let mut n = self.num.clone();
        let mut d = self.den.clone();
        for _ in 0..k {
            n = mul_eps_minus_one(&n);
            d = mul_eps_minus_one(&d);
        }
        EpsRational { num: n, den: d }
    }

    /// Cancels common `(ε - 1)` factors and evaluates at `ε = 1`.
    pub fn limit_at_one(&self) -> Result<QTRational, QTError> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let dv = eval_one(&den);
            let nv = eval_one(&num);
            if !dv.is_zero() {
                return Ok(&nv / &dv);
            }
            if !nv.is_zero() {
                return Err(QTError::PoleAtTarget);
            }
            if num.is_empty() {
                return Ok(QTRational::zero());
            }
            num = div_eps_minus_one(&num);
            den = div_eps_minus_one(&den);
        }
    }
}

fn eval_one(p: &[QTRational]) -> QTRational {
    p.iter().fold(QTRational::zero(), |a, c| &a + c)
}

fn mul_eps_minus_one(p: &[QTRational]) -> Vec<QTRational> {
    let mut r = vec![QTRational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        r[i + 1] = &r[i + 1] + c;
        r[i] = &r[i] - c;
    }
    trim(&mut r);
    r
}

/// Quotient by `(ε - 1)` of a polynomial vanishing at `ε = 1`.
fn div_eps_minus_one(p: &[QTRational]) -> Vec<QTRational> {
    if p.is_empty() {
        return vec![];
    }
    let d = p.len() - 1;
    let mut q = vec![QTRational::zero(); d];
    let mut acc = QTRational::zero();
    for i in (1..=d).rev() {
        acc = &acc + &p[i];
        q[i - 1] = acc.clone();
    }
    trim(&mut q);
    q
}
