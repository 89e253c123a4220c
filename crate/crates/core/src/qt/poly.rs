use std::collections::BTreeMap;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{QTMonomial, Rational};

/// Laurent polynomial in `q^{1/2}`, `t^{1/2}` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QTPolynomial {
    terms: BTreeMap<QTMonomial, Rational>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        QTPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, QTMonomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(m: QTMonomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: QTMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        QTPolynomial { terms }
    }

    /// Builds a polynomial from possibly repeated terms.
    pub fn from_terms<I: IntoIterator<Item = (QTMonomial, Rational)>>(it: I) -> Self {
        let mut p = QTPolynomial::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn q() -> Self {
        Self::monomial(QTMonomial::q(1))
    }

    pub fn t() -> Self {
        Self::monomial(QTMonomial::t(1))
    }

    pub fn add_term(&mut self, m: QTMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get_mut();
                *v += c;
                if v.is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&QTMonomial::ONE).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&QTMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &QTMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(QTMonomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        match self.as_term() {
            Some((m, c)) if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Lexicographically greatest term.
    pub fn leading(&self) -> Option<(QTMonomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Lexicographically smallest term.
    pub fn trailing(&self) -> Option<(QTMonomial, &Rational)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Componentwise minimum and maximum of the doubled exponents.
    pub fn exponent_box(&self) -> Option<(QTMonomial, QTMonomial)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for m in it {
            lo.qexp2 = lo.qexp2.min(m.qexp2);
            lo.texp2 = lo.texp2.min(m.texp2);
            hi.qexp2 = hi.qexp2.max(m.qexp2);
            hi.texp2 = hi.texp2.max(m.texp2);
        }
        Some((lo, hi))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTPolynomial { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul_monomial(&self, mono: QTMonomial) -> Self {
        QTPolynomial { terms: self.terms.iter().map(|(m, v)| (*m * mono, v.clone())).collect() }
    }

    pub fn mul_term(&self, c: &Rational, mono: QTMonomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTPolynomial { terms: self.terms.iter().map(|(m, v)| (*m * mono, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `q -> q^a t^b`-style monomial maps termwise.
    pub fn map_monomials<F: Fn(QTMonomial) -> QTMonomial>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every exponent is an integer (no square roots of `q`, `t`).
    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(|m| m.is_integral())
    }

    /// Exact division in the Laurent ring; `None` if `d` does not divide `self`.
    pub fn try_div(&self, d: &QTPolynomial) -> Option<QTPolynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = d.as_term() {
            let inv = c.recip();
            return Some(self.mul_term(&inv, m.inv()));
        }
        let (alo, ahi) = self.exponent_box()?;
        let (dlo, dhi) = d.exponent_box()?;
        let (qlo, qhi) = (alo.qexp2 - dlo.qexp2, ahi.qexp2 - dhi.qexp2);
        let (tlo, thi) = (alo.texp2 - dlo.texp2, ahi.texp2 - dhi.texp2);
        if qlo > qhi || tlo > thi {
            return None;
        }
        let (dm, dc) = d.leading().unwrap();
        let dc_inv = dc.recip();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&rm, rc)) = rem.iter().next_back() {
            let qm = rm / dm;
            if qm.qexp2 < qlo || qm.qexp2 > qhi || qm.texp2 < tlo || qm.texp2 > thi {
                return None;
            }
            let qc = rc * &dc_inv;
            for (m, c) in d.terms.iter() {
                let key = *m * qm;
                let delta = c * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get_mut();
                        *v -= delta;
                        if v.is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Some(QTPolynomial { terms: quot })
    }

    /// Least common multiple of coefficient denominators and gcd of numerators.
    pub(crate) fn integer_content(&self) -> (BigInt, BigInt) {
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            l = num_integer::Integer::lcm(&l, c.denom());
            g = num_integer::Integer::gcd(&g, c.numer());
        }
        (l, g)
    }

    /// Scales to coprime integer coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> QTPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let (l, g) = self.integer_content();
        let mut f = Rational::new(l, g);
        if self.leading().unwrap().1.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    /// Evaluates at `q^{1/2} = qh`, `t^{1/2} = th`.
    pub fn eval_half(&self, qh: &Rational, th: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in self.terms.iter() {
            let a = pow_signed(qh, m.qexp2)?;
            let b = pow_signed(th, m.texp2)?;
            acc += c * a * b;
        }
        Some(acc)
    }
}

pub(crate) fn pow_signed(x: &Rational, e: i64) -> Option<Rational> {
    if e == 0 {
        return Some(Rational::one());
    }
    if x.is_zero() {
        return if e > 0 { Some(Rational::zero()) } else { None };
    }
    let p = num_traits::pow::pow(x.clone(), e.unsigned_abs() as usize);
    Some(if e > 0 { p } else { p.recip() })
}

impl<'a> Add<&'a QTPolynomial> for &'a QTPolynomial {
    type Output = QTPolynomial;
    fn add(self, o: &QTPolynomial) -> QTPolynomial {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (m, c) in small.terms.iter() {
            r.add_term(*m, c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a QTPolynomial> for &'a QTPolynomial {
    type Output = QTPolynomial;
    fn sub(self, o: &QTPolynomial) -> QTPolynomial {
        let mut r = self.clone();
        for (m, c) in o.terms.iter() {
            r.add_term(*m, -c.clone());
        }
        r
    }
}

impl Neg for &QTPolynomial {
    type Output = QTPolynomial;
    fn neg(self) -> QTPolynomial {
        QTPolynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for QTPolynomial {
    type Output = QTPolynomial;
    fn neg(self) -> QTPolynomial {
        -&self
    }
}

impl<'a> Mul<&'a QTPolynomial> for &'a QTPolynomial {
    type Output = QTPolynomial;
    fn mul(self, o: &QTPolynomial) -> QTPolynomial {
        if self.is_zero() || o.is_zero() {
            return QTPolynomial::zero();
        }
        if let Some((m, c)) = o.as_term() {
            return self.mul_term(c, m);
        }
        if let Some((m, c)) = self.as_term() {
            return o.mul_term(c, m);
        }
        let mut acc: HashMap<QTMonomial, Rational> = HashMap::with_capacity(self.len() * o.len() / 2 + 1);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in o.terms.iter() {
                let v = c1 * c2;
                acc.entry(*m1 * *m2).and_modify(|e| *e += &v).or_insert(v);
            }
        }
        QTPolynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QTPolynomial> for QTPolynomial {
            type Output = QTPolynomial;
            fn $f(self, o: QTPolynomial) -> QTPolynomial {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a QTPolynomial> for QTPolynomial {
            type Output = QTPolynomial;
            fn $f(self, o: &QTPolynomial) -> QTPolynomial {
                (&self).$f(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn cancellation_gives_empty_map() {
        let q = QTPolynomial::q();
        assert!((&q - &q).is_zero());
        assert_eq!((&q - &q).len(), 0);
    }

    #[test]
    fn exact_division() {
        let one = QTPolynomial::one();
        let q = QTPolynomial::q();
        let a = &one - &(&q * &q);
        let b = &one - &q;
        assert_eq!(a.try_div(&b).unwrap(), &one + &q);
        assert!(b.try_div(&a).is_none());
        let t = QTPolynomial::t();
        assert!((&one + &t).try_div(&(&one + &q)).is_none());
    }

    #[test]
    fn laurent_division() {
        // (q^{-1} - t) / (1 - q t) = q^{-1}
        let a = QTPolynomial::from_terms([(QTMonomial::q(-1), r(1)), (QTMonomial::t(1), r(-1))]);
        let b = QTPolynomial::from_terms([(QTMonomial::ONE, r(1)), (QTMonomial::new(1, 1), r(-1))]);
        assert_eq!(a.try_div(&b).unwrap(), QTPolynomial::monomial(QTMonomial::q(-1)));
    }
}
