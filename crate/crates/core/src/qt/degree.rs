use std::fmt;

use super::{QTError, QTPolynomial, QTRational};

/// An element of `Z/2`, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn doubled(&self) -> i64 {
        self.0
    }

    pub fn as_int(&self) -> Option<i64> {
        if self.0 % 2 == 0 {
            Some(self.0 / 2)
        } else {
            None
        }
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::monomial::fmt_half(self.0))
    }
}

fn max_diag2(p: &QTPolynomial) -> i64 {
    p.terms().map(|(m, _)| m.diag2()).max().expect("nonzero polynomial")
}

fn min_diag2(p: &QTPolynomial) -> i64 {
    p.terms().map(|(m, _)| m.diag2()).min().expect("nonzero polynomial")
}

/// Order of growth of `f(az, bz)` as `z -> infinity`.
pub fn deg_se(f: &QTRational) -> Result<HalfInt, QTError> {
    if f.is_zero() {
        return Err(QTError::ZeroInput);
    }
    Ok(HalfInt(max_diag2(f.numer()) - max_diag2(f.denom())))
}

/// Order of vanishing of `f(az, bz)` as `z -> 0`.
pub fn deg_nw(f: &QTRational) -> Result<HalfInt, QTError> {
    if f.is_zero() {
        return Err(QTError::ZeroInput);
    }
    Ok(HalfInt(min_diag2(f.numer()) - min_diag2(f.denom())))
}

fn part_at(p: &QTPolynomial, d2: i64) -> QTPolynomial {
    QTPolynomial::from_terms(p.terms().filter(|(m, _)| m.diag2() == d2).map(|(m, c)| (*m, c.clone())))
}

/// Sum of the monomials of a Laurent polynomial attaining `deg_se`.
pub fn hd(f: &QTRational) -> Result<QTRational, QTError> {
    let p = f.as_laurent_polynomial().ok_or(QTError::NotPolynomial)?;
    if p.is_zero() {
        return Err(QTError::ZeroInput);
    }
    Ok(QTRational::from_poly(part_at(p, max_diag2(p))))
}

/// Sum of the monomials of a Laurent polynomial attaining `deg_nw`.
pub fn ld(f: &QTRational) -> Result<QTRational, QTError> {
    let p = f.as_laurent_polynomial().ok_or(QTError::NotPolynomial)?;
    if p.is_zero() {
        return Err(QTError::ZeroInput);
    }
    Ok(QTRational::from_poly(part_at(p, min_diag2(p))))
}

/// Leading diagonal part of a rational function: `hd(num) / hd(den)`.
///
/// This is the homogeneous rational function `g` with
/// `f(az, bz) = z^{deg_se f} g(a, b) (1 + O(1/z))`; for Laurent polynomials
/// it agrees with [`hd`].
pub fn leading_diagonal(f: &QTRational) -> Result<QTRational, QTError> {
    if f.is_zero() {
        return Err(QTError::ZeroInput);
    }
    let n = part_at(f.numer(), max_diag2(f.numer()));
    let d = part_at(f.denom(), max_diag2(f.denom()));
    QTRational::new(n, d)
}

/// Trailing diagonal part of a rational function: `ld(num) / ld(den)`.
pub fn trailing_diagonal(f: &QTRational) -> Result<QTRational, QTError> {
    if f.is_zero() {
        return Err(QTError::ZeroInput);
    }
    let n = part_at(f.numer(), min_diag2(f.numer()));
    let d = part_at(f.denom(), min_diag2(f.denom()));
    QTRational::new(n, d)
}
