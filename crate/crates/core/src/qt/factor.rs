//! Products of binomials `1 ± v^g`, kept factored into cyclotomic pieces.
//!
//! For a primitive monomial `v`, the polynomials `Φ_d(v)` are irreducible and
//! pairwise non-associate, so a fraction whose denominator is such a product
//! can be brought to lowest terms by trial division alone.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{QTMonomial, QTPolynomial, QTRational, Rational};

/// `Φ_order(base)` with `base` primitive and lexicographically positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleBinomial {
    pub base: QTMonomial,
    pub order: u32,
}

fn cyclotomic(d: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&d) {
        return v.clone();
    }
    // x^d - 1 divided by every Φ_e with e | d, e < d.
    let mut p = vec![0i64; d as usize + 1];
    p[0] = -1;
    p[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            let f = cyclotomic(e);
            p = divide_monic(&p, &f);
        }
    }
    cache.lock().unwrap().insert(d, p.clone());
    p
}

fn divide_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

impl IrreducibleBinomial {
    pub fn poly(&self) -> QTPolynomial {
        QTPolynomial::from_terms(
            cyclotomic(self.order)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (self.base.pow(i as i64), Rational::from_integer(BigInt::from(c)))),
        )
    }
}

/// `unit * mono * Π factor^mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialProduct {
    pub unit: Rational,
    pub mono: QTMonomial,
    pub factors: BTreeMap<IrreducibleBinomial, u32>,
}

impl Default for BinomialProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl BinomialProduct {
    pub fn one() -> Self {
        BinomialProduct { unit: Rational::one(), mono: QTMonomial::ONE, factors: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        BinomialProduct { unit: c, ..Self::one() }
    }

    pub fn term(c: Rational, m: QTMonomial) -> Self {
        BinomialProduct { unit: c, mono: m, factors: BTreeMap::new() }
    }

    /// Factors `c1 m1 + c2 m2`; requires `c2 / c1 = ±1` and `m1 != m2`.
    pub fn binomial(c1: &Rational, m1: QTMonomial, c2: &Rational, m2: QTMonomial) -> Option<Self> {
        let r = c2 / c1;
        let plus = if r.is_one() {
            true
        } else if (-&r).is_one() {
            false
        } else {
            return None;
        };
        let u = m2 / m1;
        if u.is_one() {
            return None;
        }
        let g = u.qexp2.gcd(&u.texp2);
        let mut v = QTMonomial::from_doubled(u.qexp2 / g, u.texp2 / g);
        let mut unit = c1.clone();
        let mut mono = m1;
        if v.qexp2 < 0 || (v.qexp2 == 0 && v.texp2 < 0) {
            // 1 + r v^{-g} = r v^{-g} (1 + r v^g)
            v = v.inv();
            mono = mono * v.pow(-g);
            if !plus {
                unit = -unit;
            }
        }
        let g = g.unsigned_abs() as u32;
        let mut factors = BTreeMap::new();
        if plus {
            for d in divisors(2 * g) {
                if !g.is_multiple_of(d) {
                    factors.insert(IrreducibleBinomial { base: v, order: d }, 1);
                }
            }
        } else {
            unit = -unit;
            for d in divisors(g) {
                factors.insert(IrreducibleBinomial { base: v, order: d }, 1);
            }
        }
        Some(BinomialProduct { unit, mono, factors })
    }

    /// Factors a polynomial with one or two terms.
    pub fn from_poly(p: &QTPolynomial) -> Option<Self> {
        let terms: Vec<_> = p.terms().collect();
        match terms.as_slice() {
            [(m, c)] => Some(Self::term((*c).clone(), **m)),
            [(m1, c1), (m2, c2)] => Self::binomial(c1, **m1, c2, **m2),
            _ => None,
        }
    }

    pub fn mul(&self, o: &BinomialProduct) -> BinomialProduct {
        let mut f = self.factors.clone();
        for (k, e) in o.factors.iter() {
            *f.entry(*k).or_insert(0) += e;
        }
        BinomialProduct { unit: &self.unit * &o.unit, mono: self.mono * o.mono, factors: f }
    }

    pub fn pow(&self, e: u32) -> BinomialProduct {
        BinomialProduct {
            unit: num_traits::pow::pow(self.unit.clone(), e as usize),
            mono: self.mono.pow(e as i64),
            factors: self.factors.iter().map(|(k, m)| (*k, m * e)).collect(),
        }
    }

    pub fn expand(&self) -> QTPolynomial {
        let mut p = QTPolynomial::term(self.unit.clone(), self.mono);
        for (k, e) in self.factors.iter() {
            let f = k.poly();
            for _ in 0..*e {
                p = &p * &f;
            }
        }
        p
    }

    /// Reduces `num * self_num / den` to canonical form without generic gcds.
    pub fn reduce_fraction(
        num: QTPolynomial,
        num_factors: &BinomialProduct,
        den: &BinomialProduct,
    ) -> Option<QTRational> {
        if den.unit.is_zero_value() {
            return None;
        }
        let mut nf = num_factors.factors.clone();
        let mut df = den.factors.clone();
        for (k, e) in nf.iter_mut() {
            if let Some(d) = df.get_mut(k) {
                let c = (*e).min(*d);
                *e -= c;
                *d -= c;
            }
        }
        nf.retain(|_, e| *e > 0);
        df.retain(|_, e| *e > 0);
        let mut num = num;
        for (k, e) in df.iter_mut() {
            let f = k.poly();
            while *e > 0 {
                match num.try_div(&f) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        df.retain(|_, e| *e > 0);
        let top = BinomialProduct { unit: num_factors.unit.clone(), mono: num_factors.mono, factors: nf };
        let bottom = BinomialProduct { unit: den.unit.clone(), mono: den.mono, factors: df };
        let n = &num * &top.expand();
        Some(QTRational::canonical_coprime(n, bottom.expand()))
    }
}

/// A sum of fractions whose denominators are binomial products, kept over a
/// factored common denominator so that additions need no polynomial gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFraction {
    num: QTPolynomial,
    den: BTreeMap<IrreducibleBinomial, u32>,
}

impl Default for FactoredFraction {
    fn default() -> Self {
        Self::zero()
    }
}

fn expand_factors<'a, I: IntoIterator<Item = (&'a IrreducibleBinomial, u32)>>(it: I) -> QTPolynomial {
    let mut p = QTPolynomial::one();
    for (k, e) in it {
        let f = k.poly();
        for _ in 0..e {
            p = &p * &f;
        }
    }
    p
}

impl FactoredFraction {
    pub fn zero() -> Self {
        FactoredFraction { num: QTPolynomial::zero(), den: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(QTPolynomial::one())
    }

    pub fn from_poly(p: QTPolynomial) -> Self {
        FactoredFraction { num: p, den: BTreeMap::new() }
    }

    /// `n / d` for binomial products `n`, `d`.
    pub fn ratio(n: &BinomialProduct, d: &BinomialProduct) -> Self {
        Self::one().mul_ratio(n, d)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies by `n / d`, cancelling factors of `n` against the denominator first.
    pub fn mul_ratio(&self, n: &BinomialProduct, d: &BinomialProduct) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (k, e) in d.factors.iter() {
            *den.entry(*k).or_insert(0) += e;
        }
        let mut rest = Vec::new();
        for (k, e) in n.factors.iter() {
            let mut e = *e;
            if let Some(x) = den.get_mut(k) {
                let c = e.min(*x);
                *x -= c;
                e -= c;
            }
            if e > 0 {
                rest.push((k, e));
            }
        }
        den.retain(|_, e| *e > 0);
        let c = &n.unit / &d.unit;
        let num = (&self.num * &expand_factors(rest)).mul_term(&c, n.mono / d.mono);
        FactoredFraction { num, den }
    }

    /// Product; denominators are merged without cancellation.
    pub fn mul(&self, o: &FactoredFraction) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (k, e) in o.den.iter() {
            *den.entry(*k).or_insert(0) += e;
        }
        FactoredFraction { num: &self.num * &o.num, den }
    }

    pub fn mul_poly(&self, p: &QTPolynomial) -> Self {
        FactoredFraction { num: &self.num * p, den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FactoredFraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn add(&self, o: &FactoredFraction) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        let mut for_self = Vec::new();
        for (k, e) in o.den.iter() {
            let cur = den.entry(*k).or_insert(0);
            if *e > *cur {
                for_self.push((k, *e - *cur));
                *cur = *e;
            }
        }
        let for_o = den.iter().filter_map(|(k, e)| {
            let have = o.den.get(k).copied().unwrap_or(0);
            (*e > have).then_some((k, *e - have))
        });
        let a = &self.num * &expand_factors(for_self);
        let b = &o.num * &expand_factors(for_o);
        FactoredFraction { num: &a + &b, den }
    }

    /// Lowest-terms value.
    pub fn to_qt(&self) -> QTRational {
        if self.num.is_zero() {
            return QTRational::zero();
        }
        let den = BinomialProduct { unit: Rational::one(), mono: QTMonomial::ONE, factors: self.den.clone() };
        BinomialProduct::reduce_fraction(self.num.clone(), &BinomialProduct::one(), &den).expect("unit denominator")
    }
}

trait IsZeroValue {
    fn is_zero_value(&self) -> bool;
}

impl IsZeroValue for Rational {
    fn is_zero_value(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn binomial_expands_back() {
        let cases = [
            (1, QTMonomial::ONE, -1, QTMonomial::new(4, -2)),
            (1, QTMonomial::new(0, 1), 1, QTMonomial::new(3, 0)),
            (-1, QTMonomial::new(2, 1), 1, QTMonomial::new(-1, 5)),
            (1, QTMonomial::from_doubled(1, 0), 1, QTMonomial::from_doubled(-1, 2)),
        ];
        for (c1, m1, c2, m2) in cases {
            let b = BinomialProduct::binomial(&int(c1), m1, &int(c2), m2).unwrap();
            let direct = QTPolynomial::from_terms([(m1, int(c1)), (m2, int(c2))]);
            assert_eq!(b.expand(), direct);
        }
    }

    #[test]
    fn reduction_matches_generic() {
        // (1 - q^2)(1 - qt) / ((1 - q)(1 + q)(1 - q t^2))
        let one_m = |m: QTMonomial| BinomialProduct::binomial(&int(1), QTMonomial::ONE, &int(-1), m).unwrap();
        let den = one_m(QTMonomial::q(1))
            .mul(&BinomialProduct::binomial(&int(1), QTMonomial::ONE, &int(1), QTMonomial::q(1)).unwrap())
            .mul(&one_m(QTMonomial::new(1, 2)));
        let num = one_m(QTMonomial::q(2)).expand();
        let nf = one_m(QTMonomial::new(1, 1));
        let fast = BinomialProduct::reduce_fraction(num.clone(), &nf, &den).unwrap();
        let slow = QTRational::new(&num * &nf.expand(), den.expand()).unwrap();
        assert_eq!(fast, slow);
    }
}
