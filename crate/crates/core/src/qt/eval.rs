use num_traits::{Signed, Zero};

use super::{QTError, QTRational, Rational};

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

fn needs_half(f: &QTRational) -> (bool, bool) {
    let mut hq = false;
    let mut ht = false;
    for p in [f.numer(), f.denom()] {
        for (m, _) in p.terms() {
            hq |= m.qexp2 % 2 != 0;
            ht |= m.texp2 % 2 != 0;
        }
    }
    (hq, ht)
}

/// Exact value of `f` at `q = q0`, `t = t0`.
///
/// Half-integer exponents require `q0` (resp. `t0`) to be the square of a
/// rational; the positive root is used.
pub fn eval_qt(f: &QTRational, q0: &Rational, t0: &Rational) -> Result<Rational, QTError> {
    let (hq, ht) = needs_half(f);
    let qh = if hq { rational_sqrt(q0).ok_or(QTError::NonSquareBase)? } else { Rational::zero() };
    let th = if ht { rational_sqrt(t0).ok_or(QTError::NonSquareBase)? } else { Rational::zero() };
    let ev = |p: &super::QTPolynomial| -> Result<Rational, QTError> {
        let mut acc = Rational::zero();
        for (m, c) in p.terms() {
            let a = if m.qexp2 % 2 == 0 {
                super::poly::pow_signed(q0, m.qexp2 / 2)
            } else {
                super::poly::pow_signed(&qh, m.qexp2)
            }
            .ok_or(QTError::Pole)?;
            let b = if m.texp2 % 2 == 0 {
                super::poly::pow_signed(t0, m.texp2 / 2)
            } else {
                super::poly::pow_signed(&th, m.texp2)
            }
            .ok_or(QTError::Pole)?;
            acc += c * a * b;
        }
        Ok(acc)
    };
    let d = ev(f.denom())?;
    if d.is_zero() {
        return Err(QTError::Pole);
    }
    Ok(ev(f.numer())? / d)
}
