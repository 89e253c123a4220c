use std::fmt;
use std::ops::{Div, Mul};

/// A monomial `q^a t^b` with `a`, `b` in `Z/2`, stored as doubled integers.
///
/// The derived ordering is lexicographic in `(qexp2, texp2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QTMonomial {
    pub qexp2: i64,
    pub texp2: i64,
}

impl QTMonomial {
    pub const ONE: QTMonomial = QTMonomial { qexp2: 0, texp2: 0 };

    pub const fn from_doubled(qexp2: i64, texp2: i64) -> Self {
        QTMonomial { qexp2, texp2 }
    }

    /// `q^a t^b` with integer exponents.
    pub const fn new(a: i64, b: i64) -> Self {
        QTMonomial { qexp2: 2 * a, texp2: 2 * b }
    }

    pub const fn q(a: i64) -> Self {
        Self::new(a, 0)
    }

    pub const fn t(b: i64) -> Self {
        Self::new(0, b)
    }

    /// `s = sqrt(t/q)` raised to the power `k`.
    pub const fn s(k: i64) -> Self {
        QTMonomial { qexp2: -k, texp2: k }
    }

    pub fn is_one(&self) -> bool {
        self.qexp2 == 0 && self.texp2 == 0
    }

    pub fn inv(&self) -> Self {
        QTMonomial { qexp2: -self.qexp2, texp2: -self.texp2 }
    }

    pub fn pow(&self, e: i64) -> Self {
        QTMonomial { qexp2: self.qexp2 * e, texp2: self.texp2 * e }
    }

    /// Doubled diagonal degree `2(a + b)`.
    pub fn diag2(&self) -> i64 {
        self.qexp2 + self.texp2
    }

    /// True when both exponents are integers.
    pub fn is_integral(&self) -> bool {
        self.qexp2 % 2 == 0 && self.texp2 % 2 == 0
    }
}

impl Mul for QTMonomial {
    type Output = QTMonomial;
    fn mul(self, o: QTMonomial) -> QTMonomial {
        QTMonomial { qexp2: self.qexp2 + o.qexp2, texp2: self.texp2 + o.texp2 }
    }
}

impl Div for QTMonomial {
    type Output = QTMonomial;
    fn div(self, o: QTMonomial) -> QTMonomial {
        QTMonomial { qexp2: self.qexp2 - o.qexp2, texp2: self.texp2 - o.texp2 }
    }
}

pub(crate) fn fmt_half(v2: i64) -> String {
    if v2 % 2 == 0 {
        (v2 / 2).to_string()
    } else {
        format!("{}/2", v2)
    }
}

impl fmt::Display for QTMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        if self.qexp2 != 0 {
            write!(f, "q^{{{}}}", fmt_half(self.qexp2))?;
        }
        if self.texp2 != 0 {
            write!(f, "t^{{{}}}", fmt_half(self.texp2))?;
        }
        Ok(())
    }
}
