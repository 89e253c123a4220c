use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gcd::gcd;
use super::{QTError, QTMonomial, QTPolynomial, Rational};

/// Element of `Q(q^{1/2}, t^{1/2})` in canonical reduced form.
///
/// The denominator has no monomial content (its minimal exponents are zero),
/// shares no factor with the numerator, and its lexicographically greatest
/// coefficient is `+1`. Equal values therefore have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QTRational {
    num: QTPolynomial,
    den: QTPolynomial,
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTRational {
    pub fn zero() -> Self {
        QTRational { num: QTPolynomial::zero(), den: QTPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(QTPolynomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QTPolynomial::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(QTPolynomial::constant(c))
    }

    pub fn monomial(m: QTMonomial) -> Self {
        Self::from_poly(QTPolynomial::monomial(m))
    }

    pub fn term(c: i64, m: QTMonomial) -> Self {
        Self::from_poly(QTPolynomial::term(Rational::from_integer(BigInt::from(c)), m))
    }

    pub fn q() -> Self {
        Self::monomial(QTMonomial::q(1))
    }

    pub fn t() -> Self {
        Self::monomial(QTMonomial::t(1))
    }

    /// `s = sqrt(t/q)`.
    pub fn s() -> Self {
        Self::monomial(QTMonomial::s(1))
    }

    pub fn from_poly(p: QTPolynomial) -> Self {
        QTRational { num: p, den: QTPolynomial::one() }
    }

    pub fn new(num: QTPolynomial, den: QTPolynomial) -> Result<Self, QTError> {
        if den.is_zero() {
            return Err(QTError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QTPolynomial, den: QTPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.len() == 1 {
            return Self::canonical_coprime(num, den);
        }
        if let Some(qq) = num.try_div(&den) {
            return Self::from_poly(qq);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            Self::canonical_coprime(num, den)
        } else {
            let n = num.try_div(&g).expect("gcd divides numerator");
            let d = den.try_div(&g).expect("gcd divides denominator");
            Self::canonical_coprime(n, d)
        }
    }

    /// Normalizes units only; the caller guarantees `gcd(num, den) = 1`.
    pub(crate) fn canonical_coprime(num: QTPolynomial, den: QTPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (lo, _) = den.exponent_box().expect("nonzero denominator");
        let (_, lc) = den.leading().unwrap();
        let inv = lc.recip();
        let shift = lo.inv();
        QTRational { num: num.mul_term(&inv, shift), den: den.mul_term(&inv, shift) }
    }

    pub fn numer(&self) -> &QTPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &QTPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent_polynomial(&self) -> Option<&QTPolynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// `Some((c, m))` when the value is `c * m` for a monomial `m`.
    pub fn as_term(&self) -> Option<(Rational, QTMonomial)> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_term().map(|(m, c)| (c.clone(), m))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_constant()
    }

    pub fn recip(&self) -> Result<Self, QTError> {
        if self.is_zero() {
            return Err(QTError::DivisionByZero);
        }
        Ok(Self::canonical_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &QTRational) -> Result<Self, QTError> {
        Ok(self * &o.recip()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, QTError> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let e = e as u32;
        Ok(Self::canonical_coprime(self.num.pow(e), self.den.pow(e)))
    }

    pub fn mul_monomial(&self, m: QTMonomial) -> Self {
        QTRational { num: self.num.mul_monomial(m), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTRational { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitutes a monomial map on exponents, e.g. `q -> q^{-1}`.
    pub fn map_monomials<F: Fn(QTMonomial) -> QTMonomial + Copy>(&self, f: F) -> Self {
        Self::reduce(self.num.map_monomials(f), self.den.map_monomials(f))
    }
}

impl<'a> Add<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn add(self, o: &QTRational) -> QTRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = &self.num + &o.num;
            if self.den.is_one() {
                return QTRational::from_poly(num);
            }
            return QTRational::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = &(&self.num * &o.den) + &o.num;
            return QTRational::canonical_coprime(num, o.den.clone());
        }
        if o.den.is_one() {
            let num = &(&o.num * &self.den) + &self.num;
            return QTRational::canonical_coprime(num, self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            let den = &self.den * &o.den;
            return QTRational::canonical_coprime(num, den);
        }
        let d1 = self.den.try_div(&g).unwrap();
        let d2 = o.den.try_div(&g).unwrap();
        let num = &(&self.num * &d2) + &(&o.num * &d1);
        if num.is_zero() {
            return QTRational::zero();
        }
        let den = &self.den * &d2;
        let h = gcd(&num, &g);
        if h.is_one() {
            QTRational::canonical_coprime(num, den)
        } else {
            QTRational::canonical_coprime(num.try_div(&h).unwrap(), den.try_div(&h).unwrap())
        }
    }
}

impl<'a> Sub<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn sub(self, o: &QTRational) -> QTRational {
        self + &(-o)
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -self.num, den: self.den }
    }
}

impl<'a> Mul<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn mul(self, o: &QTRational) -> QTRational {
        if self.is_zero() || o.is_zero() {
            return QTRational::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return QTRational::from_poly(&self.num * &o.num);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.try_div(&g1).unwrap(), o.den.try_div(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.try_div(&g2).unwrap(), self.den.try_div(&g2).unwrap())
        };
        QTRational::canonical_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn div(self, o: &QTRational) -> QTRational {
        self.checked_div(o).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QTRational> for QTRational {
            type Output = QTRational;
            fn $f(self, o: QTRational) -> QTRational {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a QTRational> for QTRational {
            type Output = QTRational;
            fn $f(self, o: &QTRational) -> QTRational {
                (&self).$f(o)
            }
        }
        impl<'a> $tr<QTRational> for &'a QTRational {
            type Output = QTRational;
            fn $f(self, o: QTRational) -> QTRational {
                self.$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::ops::AddAssign<&QTRational> for QTRational {
    fn add_assign(&mut self, o: &QTRational) {
        *self = &*self + o;
    }
}

impl std::ops::MulAssign<&QTRational> for QTRational {
    fn mul_assign(&mut self, o: &QTRational) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for QTRational {
    fn sum<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        iter.fold(QTRational::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for QTRational {
    fn product<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        iter.fold(QTRational::one(), |a, b| a * b)
    }
}

impl From<i64> for QTRational {
    fn from(c: i64) -> Self {
        QTRational::from_int(c)
    }
}

impl From<QTPolynomial> for QTRational {
    fn from(p: QTPolynomial) -> Self {
        QTRational::from_poly(p)
    }
}

impl From<QTMonomial> for QTRational {
    fn from(m: QTMonomial) -> Self {
        QTRational::monomial(m)
    }
}

/// `1 - c * m` as a rational function; a frequent building block.
pub fn one_minus(c: i64, m: QTMonomial) -> QTRational {
    let mut p = QTPolynomial::one();
    p.add_term(m, -Rational::from_integer(BigInt::from(c)));
    QTRational::from_poly(p)
}

impl Zero for QTRational {
    fn zero() -> Self {
        QTRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QTRational {
    fn one() -> Self {
        QTRational::one()
    }
}
