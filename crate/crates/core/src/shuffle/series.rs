//! Truncated Laurent expansion of symmetrized kernels in one auxiliary
//! parameter.
//!
//! Every box weight is `w · u^d`. Each factor of a term is a monomial or a
//! binomial in such weights, so each term splits as
//! `lead · δ^val · (1 + O(δ))` with `lead` a ratio of binomial products and
//! the normalized tail built from a handful of elementary series. With
//! `u = 1 + δ` this computes the limit at `u = 1`; with `u = δ` it expands
//! around `ξ = 1/u = ∞`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{EvaluationPoint, ShuffleError, Template, VarMono};
use crate::qt::{BinomialProduct, FactoredFraction, QTMonomial, QTPolynomial, QTRational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expansion {
    /// `w ↦ w ε^d`, expanded around `ε = 1`.
    EpsToOne,
    /// `w ↦ w ξ^{-d}`, expanded in `1/ξ` around `ξ = ∞`.
    XiToInfinity,
}

#[derive(Debug, Clone, Copy)]
struct DMono {
    m: QTMonomial,
    c: i64,
}

fn value(v: &VarMono, subs: &[DMono]) -> DMono {
    let mut m = v.qt;
    let mut c = 0;
    for &(i, e) in &v.vars {
        m = m * subs[i].m.pow(e);
        c += e * subs[i].c;
    }
    DMono { m, c }
}

fn int(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

/// Generalized binomial coefficient `C(c, i)`.
fn binom(c: i64, i: usize) -> Rational {
    let mut r = Rational::one();
    for j in 0..i as i64 {
        r = r * int(c - j) / int(j + 1);
    }
    r
}

fn one_minus(m: QTMonomial) -> BinomialProduct {
    BinomialProduct::binomial(&Rational::one(), QTMonomial::ONE, &-Rational::one(), m).expect("m != 1")
}

/// Normalized series with constant term 1.
#[derive(Debug, Clone, Copy)]
enum Gen {
    /// `(1 - m(1+δ)^c) / (1 - m)`, `m != 1`.
    EpsGeneric { m: QTMonomial, c: i64 },
    /// `(1 - (1+δ)^c) / (-cδ)`, `c != 0`.
    EpsUnit { c: i64 },
    /// `(1+δ)^c`.
    EpsPower { c: i64 },
    /// `1 - m δ^c`, `c > 0`.
    Sparse { m: QTMonomial, c: i64 },
}

impl Gen {
    fn series(&self, prec: usize) -> Vec<FactoredFraction> {
        let mut s = vec![FactoredFraction::zero(); prec + 1];
        s[0] = FactoredFraction::one();
        match *self {
            Gen::EpsGeneric { m, c } => {
                let d = one_minus(m);
                for (i, slot) in s.iter_mut().enumerate().skip(1) {
                    let b = binom(c, i);
                    if !b.is_zero() {
                        *slot = FactoredFraction::ratio(&BinomialProduct::term(-b, m), &d);
                    }
                }
            }
            Gen::EpsUnit { c } => {
                for (i, slot) in s.iter_mut().enumerate().skip(1) {
                    let v = binom(c, i + 1) / int(c);
                    *slot = FactoredFraction::from_poly(QTPolynomial::constant(v));
                }
            }
            Gen::EpsPower { c } => {
                for (i, slot) in s.iter_mut().enumerate().skip(1) {
                    *slot = FactoredFraction::from_poly(QTPolynomial::constant(binom(c, i)));
                }
            }
            Gen::Sparse { m, c } => {
                if c as usize <= prec {
                    s[c as usize] = FactoredFraction::from_poly(QTPolynomial::term(-Rational::one(), m));
                }
            }
        }
        s
    }
}

fn mul_trunc(a: &[FactoredFraction], b: &[FactoredFraction]) -> Vec<FactoredFraction> {
    let p = a.len();
    let mut out = vec![FactoredFraction::zero(); p];
    for i in 0..p {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..p - i {
            if !b[j].is_zero() {
                out[i + j] = out[i + j].add(&a[i].mul(&b[j]));
            }
        }
    }
    out
}

/// Inverse of a series with constant term 1.
fn inv_trunc(a: &[FactoredFraction]) -> Vec<FactoredFraction> {
    let p = a.len();
    let mut b = vec![FactoredFraction::zero(); p];
    b[0] = FactoredFraction::one();
    for i in 1..p {
        let mut acc = FactoredFraction::zero();
        for j in 1..=i {
            if !a[j].is_zero() && !b[i - j].is_zero() {
                acc = acc.add(&a[j].mul(&b[i - j]));
            }
        }
        b[i] = acc.scale(&-Rational::one());
    }
    b
}

struct Term {
    val: i64,
    lead_n: BinomialProduct,
    lead_d: BinomialProduct,
    gens: Vec<(Gen, bool)>,
    eps_pow: i64,
    psums: Vec<Vec<DMono>>,
}

enum Outcome {
    Zero,
    Pole,
}

impl Term {
    fn lead(&mut self, x: &BinomialProduct, numerator: bool) {
        if numerator {
            self.lead_n = self.lead_n.mul(x);
        } else {
            self.lead_d = self.lead_d.mul(x);
        }
    }

    fn binomial(&mut self, a: DMono, b: DMono, numerator: bool, mode: Expansion) -> Result<(), Outcome> {
        let sign = if numerator { 1 } else { -1 };
        let vanish = if numerator { Outcome::Zero } else { Outcome::Pole };
        match mode {
            Expansion::EpsToOne => {
                self.lead(&BinomialProduct::term(Rational::one(), a.m), numerator);
                self.eps_pow += sign * a.c;
                let m = b.m / a.m;
                let c = b.c - a.c;
                if !m.is_one() {
                    self.lead(&one_minus(m), numerator);
                    self.gens.push((Gen::EpsGeneric { m, c }, !numerator));
                } else if c == 0 {
                    return Err(vanish);
                } else {
                    self.lead(&BinomialProduct::constant(int(-c)), numerator);
                    self.val += sign;
                    self.gens.push((Gen::EpsUnit { c }, !numerator));
                }
            }
            Expansion::XiToInfinity => {
                if a.c < b.c {
                    self.lead(&BinomialProduct::term(Rational::one(), a.m), numerator);
                    self.val += sign * a.c;
                    self.gens.push((Gen::Sparse { m: b.m / a.m, c: b.c - a.c }, !numerator));
                } else if a.c > b.c {
                    self.lead(&BinomialProduct::term(-Rational::one(), b.m), numerator);
                    self.val += sign * b.c;
                    self.gens.push((Gen::Sparse { m: a.m / b.m, c: a.c - b.c }, !numerator));
                } else {
                    let m = b.m / a.m;
                    if m.is_one() {
                        return Err(vanish);
                    }
                    self.val += sign * a.c;
                    self.lead(&BinomialProduct::term(Rational::one(), a.m), numerator);
                    self.lead(&one_minus(m), numerator);
                }
            }
        }
        Ok(())
    }

    fn build(tpl: &Template, subs: &[DMono], mode: Expansion) -> Result<Option<Term>, ShuffleError> {
        let mut term = Term {
            val: 0,
            lead_n: BinomialProduct::one(),
            lead_d: BinomialProduct::one(),
            gens: vec![],
            eps_pow: 0,
            psums: vec![],
        };
        for (a, b) in &tpl.num {
            match term.binomial(value(a, subs), value(b, subs), true, mode) {
                Ok(()) => {}
                Err(_) => return Ok(None),
            }
        }
        for (a, b) in &tpl.den {
            if term.binomial(value(a, subs), value(b, subs), false, mode).is_err() {
                return Err(ShuffleError::Pole);
            }
        }
        for mono in &tpl.monos {
            let v = value(mono, subs);
            term.lead_n = term.lead_n.mul(&BinomialProduct::term(Rational::one(), v.m));
            match mode {
                Expansion::EpsToOne => term.eps_pow += v.c,
                Expansion::XiToInfinity => term.val += v.c,
            }
        }
        for sum in &tpl.psums {
            let vals: Vec<DMono> = sum.iter().map(|v| value(v, subs)).collect();
            if mode == Expansion::XiToInfinity {
                term.val += vals.iter().map(|v| v.c).min().expect("nonempty sum");
            }
            term.psums.push(vals);
        }
        Ok(Some(term))
    }

    /// Coefficients of orders `val..=max_order`.
    fn coefficients(&self, max_order: i64, mode: Expansion) -> Vec<FactoredFraction> {
        let prec = (max_order - self.val) as usize;
        let mut s = vec![FactoredFraction::zero(); prec + 1];
        s[0] = FactoredFraction::one();
        if prec > 0 {
            for (g, inverse) in &self.gens {
                let gs = g.series(prec);
                let gs = if *inverse { inv_trunc(&gs) } else { gs };
                s = mul_trunc(&s, &gs);
            }
            if mode == Expansion::EpsToOne && self.eps_pow != 0 {
                s = mul_trunc(&s, &Gen::EpsPower { c: self.eps_pow }.series(prec));
            }
        }
        for vals in &self.psums {
            s = mul_trunc(&s, &psum_series(vals, prec, mode));
        }
        s.iter().map(|c| c.mul_ratio(&self.lead_n, &self.lead_d)).collect()
    }
}

/// A sum of deformed monomials with unit coefficients, relative to its own
/// valuation. In the `ε` case the constant term is a sum of monomials with
/// positive coefficients, so the valuation is 0.
fn psum_series(vals: &[DMono], prec: usize, mode: Expansion) -> Vec<FactoredFraction> {
    (0..=prec)
        .map(|i| {
            let mut p = QTPolynomial::zero();
            match mode {
                Expansion::EpsToOne => {
                    for v in vals {
                        p.add_term(v.m, binom(v.c, i));
                    }
                }
                Expansion::XiToInfinity => {
                    let lo = vals.iter().map(|v| v.c).min().expect("nonempty sum");
                    for v in vals.iter().filter(|v| v.c == lo + i as i64) {
                        p.add_term(v.m, Rational::one());
                    }
                }
            }
            FactoredFraction::from_poly(p)
        })
        .collect()
}

fn merge(
    mut a: BTreeMap<i64, FactoredFraction>,
    b: BTreeMap<i64, FactoredFraction>,
) -> BTreeMap<i64, FactoredFraction> {
    for (o, c) in b {
        let slot = a.entry(o).or_default();
        *slot = slot.add(&c);
    }
    a
}

/// The symmetrized template at `pt`, as coefficients of `δ^o` for `o <= max_order`
/// (with `δ = ε - 1` or `δ = 1/ξ`). Orders below the smallest returned key vanish.
pub(super) fn sym_series(
    tpl: &Template,
    pt: &EvaluationPoint,
    mode: Expansion,
    max_order: i64,
) -> Result<BTreeMap<i64, QTRational>, ShuffleError> {
    let subs: Vec<DMono> = pt.boxes.iter().map(|b| DMono { m: b.weight, c: b.deform }).collect();
    let perms: Vec<Vec<usize>> = (0..tpl.n_vars).permutations(tpl.n_vars).collect();
    let sums = perms
        .par_iter()
        .map(|perm| -> Result<BTreeMap<i64, FactoredFraction>, ShuffleError> {
            let arranged: Vec<DMono> = perm.iter().map(|&i| subs[i]).collect();
            let mut out = BTreeMap::new();
            if let Some(term) = Term::build(tpl, &arranged, mode)? {
                if term.val <= max_order {
                    for (i, c) in term.coefficients(max_order, mode).into_iter().enumerate() {
                        if !c.is_zero() {
                            out.insert(term.val + i as i64, c);
                        }
                    }
                }
            }
            Ok(out)
        })
        .try_reduce(BTreeMap::new, |a, b| Ok(merge(a, b)))?;
    Ok(sums.into_iter().map(|(o, c)| (o, &c.to_qt() * &tpl.constant)).filter(|(_, c)| !c.is_zero()).collect())
}

/// One undeformed term, or `Pole` if it is singular.
pub(super) fn single_term(tpl: &Template, weights: &[QTMonomial]) -> Result<QTRational, ShuffleError> {
    let subs: Vec<DMono> = weights.iter().map(|&m| DMono { m, c: 0 }).collect();
    match Term::build(tpl, &subs, Expansion::EpsToOne)? {
        None => Ok(QTRational::zero()),
        Some(term) => {
            if term.val != 0 {
                return Err(ShuffleError::Pole);
            }
            let c = term.coefficients(0, Expansion::EpsToOne);
            Ok(&c[0].to_qt() * &tpl.constant)
        }
    }
}
