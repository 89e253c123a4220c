//! Exact arithmetic in `Q(q^{1/2}, t^{1/2})`.

mod degree;
mod eps;
mod eval;
mod factor;
pub(crate) mod gcd;
mod monomial;
mod parse;
mod poly;
mod rational;

pub use degree::{deg_nw, deg_se, hd, ld, leading_diagonal, trailing_diagonal, HalfInt};
pub use eps::EpsRational;
pub use eval::eval_qt;
pub use factor::{BinomialProduct, FactoredFraction, IrreducibleBinomial};
pub use gcd::gcd;
pub use monomial::QTMonomial;
pub use poly::QTPolynomial;
pub use rational::{one_minus, QTRational};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QTError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input has no degree")]
    ZeroInput,
    #[error("input is not a Laurent polynomial")]
    NotPolynomial,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("denominator still vanishes at eps = 1 after cancellation")]
    PoleAtTarget,
    #[error("half-integer exponent at a base that is not a rational square")]
    NonSquareBase,
    #[error("parse error: {0}")]
    Parse(String),
}
