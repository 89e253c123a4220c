//! The elliptic Hall algebra acting on `Λ`.
//!
//! Operators are apply-only. Every result is expressed in the `M` basis,
//! where shuffle kernels act through
//! `R · M_μ = Σ_λ M_λ R(λ\μ) ∏_{■∈λ\μ} [(t - qχ_■) ∏_{□∈μ} ω(χ_■/χ_□)]`.

use rayon::prelude::*;
use thiserror::Error;

use crate::qt::{one_minus, BinomialProduct, FactoredFraction, QTMonomial, QTRational, Rational};
use crate::shapes::{enumerate_partitions, enumerate_skew_over, enumerate_skew_under, Partition, SkewShape};
use crate::shuffle::{sym_evaluate, EvaluationPoint, ShuffleError, ShuffleKernel};
use crate::sym::{self, m_normalizer, multiply, nabla, p_norm, Basis, SymError, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HallError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
    #[error("operator has no single degree shift")]
    Inhomogeneous,
    #[error("internal error: {0}")]
    Internal(String),
}

/// Where the row index of the slope-∞ eigenvalue starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexOrigin {
    /// `Σ_{i≥0} q^{λ_i - 1} t^{-i}` with the first row called `λ_0`.
    Zero,
    /// `Σ_{i≥1} q^{λ_i - 1} t^{-i}`.
    #[default]
    One,
}

#[derive(Debug, Clone)]
pub enum HallOperator {
    KernelAction(ShuffleKernel),
    MultiplyBy(SymFunc),
    /// `∇^r ∘ base ∘ ∇^{-r}`.
    NablaConjugate {
        base: Box<HallOperator>,
        r: i64,
    },
    /// `scalar · base†` for the Macdonald inner product.
    Adjoint {
        base: Box<HallOperator>,
        scalar: QTRational,
    },
    DiagonalInfinity {
        k: i64,
        origin: IndexOrigin,
    },
    /// `Σ c · (A_1 ∘ A_2 ∘ …)`; the last factor of each word acts first.
    Combination(Vec<(QTRational, Vec<HallOperator>)>),
}

impl HallOperator {
    /// `p_k^{m/n}` through its shuffle kernel.
    pub fn p(k: usize, m: i64, n: usize) -> Result<Self, HallError> {
        Ok(HallOperator::KernelAction(ShuffleKernel::p(k, m, n)?))
    }

    /// `e_k^{m/n}` through its shuffle kernel.
    pub fn e(k: usize, m: i64, n: usize) -> Result<Self, HallError> {
        Ok(HallOperator::KernelAction(ShuffleKernel::e(k, m, n)?))
    }

    /// `∇^m p_k ∇^{-m}`.
    pub fn p_nabla(k: usize, m: i64) -> Self {
        let pk = SymFunc::basis_element(Basis::PowerSum, Partition::of(&[k]));
        HallOperator::NablaConjugate { base: Box::new(HallOperator::MultiplyBy(pk)), r: m }
    }

    /// `∇^m e_k ∇^{-m}`.
    pub fn e_nabla(k: usize, m: i64) -> Self {
        let ek = SymFunc::basis_element(Basis::Elementary, Partition::of(&[k]));
        HallOperator::NablaConjugate { base: Box::new(HallOperator::MultiplyBy(ek)), r: m }
    }

    /// `p_{-kn,-km} = -(p_k^{-m/n})† (s/q)^{kn}`.
    pub fn lowering(k: usize, m: i64, n: usize) -> Result<Self, HallError> {
        let base = HallOperator::p(k, -m, n)?;
        let mono = (QTMonomial::s(1) * QTMonomial::q(-1)).pow((k * n) as i64);
        Ok(HallOperator::Adjoint { base: Box::new(base), scalar: QTRational::term(-1, mono) })
    }

    /// `p_{-k}^{m/n} = p_{-kn,-km} · (-s^k (1 - t^k) / (1 - q^{-k}))`.
    pub fn p_negative(k: usize, m: i64, n: usize) -> Result<Self, HallError> {
        let ki = k as i64;
        let HallOperator::Adjoint { base, scalar } = Self::lowering(k, m, n)? else { unreachable!() };
        let ratio = one_minus(1, QTMonomial::t(ki)).checked_div(&one_minus(1, QTMonomial::q(-ki))).expect("q^k != 1");
        let c = &ratio.mul_monomial(QTMonomial::s(ki)) * &QTRational::from_int(-1);
        Ok(HallOperator::Adjoint { base, scalar: &scalar * &c })
    }

    /// `e_{-k}^{m/n}`: `e_k` written in power sums, with `p_j ↦ p_{-j}^{m/n}`.
    pub fn e_negative(k: usize, m: i64, n: usize) -> Result<Self, HallError> {
        let ek = SymFunc::basis_element(Basis::Elementary, Partition::of(&[k])).in_basis(Basis::PowerSum)?;
        let mut words = vec![];
        for (rho, c) in ek.terms() {
            let word = rho.parts().iter().map(|&j| Self::p_negative(j, m, n)).collect::<Result<Vec<_>, _>>()?;
            words.push((c.clone(), word));
        }
        Ok(HallOperator::Combination(words))
    }

    /// Degree change in boxes.
    pub fn degree_shift(&self) -> Result<i64, HallError> {
        match self {
            HallOperator::KernelAction(k) => Ok(k.n_vars() as i64),
            HallOperator::MultiplyBy(f) => {
                let mut degs = f.terms().map(|(l, _)| l.size());
                let d = degs.next().unwrap_or(0);
                if degs.any(|e| e != d) {
                    return Err(HallError::Inhomogeneous);
                }
                Ok(d as i64)
            }
            HallOperator::NablaConjugate { base, .. } => base.degree_shift(),
            HallOperator::Adjoint { base, .. } => Ok(-base.degree_shift()?),
            HallOperator::DiagonalInfinity { .. } => Ok(0),
            HallOperator::Combination(words) => {
                let mut shifts = words.iter().map(|(_, w)| w.iter().map(|a| a.degree_shift()).sum::<Result<i64, _>>());
                let d = shifts.next().transpose()?.unwrap_or(0);
                for s in shifts {
                    if s? != d {
                        return Err(HallError::Inhomogeneous);
                    }
                }
                Ok(d)
            }
        }
    }

    /// Composition `self ∘ other`.
    pub fn then_after(self, other: HallOperator) -> HallOperator {
        HallOperator::Combination(vec![(QTRational::one(), vec![self, other])])
    }
}

/// `[a, b] = a∘b - b∘a`.
pub fn commutator(a: &HallOperator, b: &HallOperator) -> HallOperator {
    HallOperator::Combination(vec![
        (QTRational::one(), vec![a.clone(), b.clone()]),
        (QTRational::from_int(-1), vec![b.clone(), a.clone()]),
    ])
}

fn binom(c1: i64, m1: QTMonomial, c2: i64, m2: QTMonomial) -> BinomialProduct {
    BinomialProduct::binomial(&Rational::from_integer(c1.into()), m1, &Rational::from_integer(c2.into()), m2)
        .expect("binomial does not vanish")
}

/// `∏_{■∈λ\μ} [(t - qχ_■) ∏_{□∈μ} ω(χ_■/χ_□)]`.
pub fn skew_factor(sh: &SkewShape) -> QTRational {
    let (mut num, mut den) = (BinomialProduct::one(), BinomialProduct::one());
    let inner = sh.inner.cells();
    for b in sh.cells() {
        let cb = b.weight();
        num = num.mul(&binom(1, QTMonomial::t(1), -1, QTMonomial::q(1) * cb));
        for w in &inner {
            // ω(x) = (1 - xq)(t - x) / ((1 - x)(t - xq))
            let x = cb * w.weight().inv();
            num = num.mul(&binom(1, QTMonomial::ONE, -1, x * QTMonomial::q(1)));
            num = num.mul(&binom(1, QTMonomial::t(1), -1, x));
            den = den.mul(&binom(1, QTMonomial::ONE, -1, x));
            den = den.mul(&binom(1, QTMonomial::t(1), -1, x * QTMonomial::q(1)));
        }
    }
    FactoredFraction::ratio(&num, &den).to_qt()
}

/// The coefficient of `M_λ` in `R · M_μ` for `sh = λ\μ`.
pub fn kernel_coefficient(kernel: &ShuffleKernel, sh: &SkewShape) -> Result<QTRational, HallError> {
    let r = sym_evaluate(kernel, &EvaluationPoint::from_skew(sh))
        .map_err(|e| HallError::Internal(format!("{kernel} at {sh:?}: {e}")))?;
    if r.is_zero() {
        return Ok(r);
    }
    Ok(&r * &skew_factor(sh))
}

/// `⟨M_λ, M_λ⟩_{q,t}`.
pub fn m_norm(l: &Partition) -> QTRational {
    let c = m_normalizer(l);
    p_norm(l).checked_div(&(&c * &c)).expect("nonzero normalizer")
}

/// The slope-∞ eigenvalue on `M_λ`, the infinite tail summed as a geometric series.
pub fn infinity_eigenvalue(l: &Partition, origin: IndexOrigin) -> QTRational {
    let len = l.len() as i64;
    let mut acc: QTRational = l
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| QTRational::monomial(QTMonomial::new(p as i64 - 1, -(i as i64) - 1)))
        .fold(QTRational::zero(), |a, b| &a + &b);
    let tail = QTRational::monomial(QTMonomial::new(-1, -len - 1))
        .checked_div(&one_minus(1, QTMonomial::t(-1)))
        .expect("t != 1");
    acc = &acc + &tail;
    match origin {
        IndexOrigin::One => acc,
        IndexOrigin::Zero => acc.mul_monomial(QTMonomial::t(1)),
    }
}

fn bound() -> usize {
    sym::config().degree_bound
}

fn check_target(d: i64) -> Result<(), HallError> {
    let b = bound();
    if d > b as i64 {
        return Err(SymError::DegreeBound { degree: d as usize, bound: b }.into());
    }
    Ok(())
}

/// `R · M_μ` for a single partition.
fn kernel_on(kernel: &ShuffleKernel, mu: &Partition) -> Result<Vec<(Partition, QTRational)>, HallError> {
    check_target((mu.size() + kernel.n_vars()) as i64)?;
    let shapes: Vec<SkewShape> = enumerate_skew_over(mu, kernel.n_vars()).collect();
    shapes.into_par_iter().map(|sh| Ok((sh.outer.clone(), kernel_coefficient(kernel, &sh)?))).collect()
}

/// Coefficients of `M_λ` in `base · M_μ` for every `μ` of size `|λ| - shift`.
fn column_into(base: &HallOperator, lambda: &Partition) -> Result<Vec<(Partition, QTRational)>, HallError> {
    let d = lambda.size() as i64 - base.degree_shift()?;
    if d < 0 {
        return Ok(vec![]);
    }
    if let HallOperator::KernelAction(k) = base {
        return enumerate_skew_under(lambda, k.n_vars())
            .into_par_iter()
            .map(|sh| Ok((sh.inner.clone(), kernel_coefficient(k, &sh)?)))
            .collect();
    }
    let mus: Vec<Partition> = enumerate_partitions(d as usize).collect();
    mus.into_par_iter()
        .map(|mu| {
            let img = act(base, &SymFunc::basis_element(Basis::MacM, mu.clone()))?;
            Ok((mu, img.coeff(lambda)))
        })
        .collect()
}

/// Applies `op` to `f`; the result is in the `M` basis.
pub fn act(op: &HallOperator, f: &SymFunc) -> Result<SymFunc, HallError> {
    let f = f.in_basis(Basis::MacM)?;
    let mut out = SymFunc::zero(Basis::MacM);
    match op {
        HallOperator::KernelAction(k) => {
            for (mu, c) in f.terms() {
                for (l, a) in kernel_on(k, mu)? {
                    out.add_term(l, &(&a * c));
                }
            }
        }
        HallOperator::MultiplyBy(g) => {
            if let (Some(a), Some(b)) = (f.max_degree(), g.max_degree()) {
                check_target((a + b) as i64)?;
            }
            out = multiply(&f, g)?.in_basis(Basis::MacM)?;
        }
        HallOperator::NablaConjugate { base, r } => {
            out = nabla(&act(base, &nabla(&f, -r)?)?, *r)?;
        }
        HallOperator::Adjoint { base, scalar } => {
            // base · M_μ = Σ a_{λμ} M_λ  ⇒  base† · M_λ = Σ_μ a_{λμ} ⟨M_λ,M_λ⟩/⟨M_μ,M_μ⟩ M_μ
            for (l, c) in f.terms() {
                let gl = m_norm(l);
                for (mu, a) in column_into(base, l)? {
                    if a.is_zero() {
                        continue;
                    }
                    let w = (&a * &gl).checked_div(&m_norm(&mu)).expect("nonzero norm");
                    out.add_term(mu, &(&(&w * c) * scalar));
                }
            }
        }
        HallOperator::DiagonalInfinity { origin, .. } => {
            for (l, c) in f.terms() {
                out.add_term(l.clone(), &(c * &infinity_eigenvalue(l, *origin)));
            }
        }
        HallOperator::Combination(words) => {
            for (c, word) in words {
                let mut g = f.clone();
                for a in word.iter().rev() {
                    if g.is_zero() {
                        break;
                    }
                    g = act(a, &g)?;
                }
                out = out.add(&g.scale(c))?;
            }
        }
    }
    Ok(out)
}

/// `p_k^{m/n} · f`.
pub fn p_action(k: usize, m: i64, n: usize, f: &SymFunc) -> Result<SymFunc, HallError> {
    act(&HallOperator::p(k, m, n)?, f)
}

/// `e_k^{m/n} · f`.
pub fn e_action(k: usize, m: i64, n: usize, f: &SymFunc) -> Result<SymFunc, HallError> {
    act(&HallOperator::e(k, m, n)?, f)
}

/// `e_{-k}^{m/n} · f`.
pub fn negative_e_action(k: usize, m: i64, n: usize, f: &SymFunc) -> Result<SymFunc, HallError> {
    act(&HallOperator::e_negative(k, m, n)?, f)
}

/// `[a, b] M_λ = expected · M_λ` for every `|λ| ≤ d`.
pub fn commutator_check(
    a: &HallOperator,
    b: &HallOperator,
    expected: &QTRational,
    d: usize,
) -> Result<bool, HallError> {
    let c = commutator(a, b);
    for n in 0..=d {
        for l in enumerate_partitions(n) {
            let ml = SymFunc::basis_element(Basis::MacM, l);
            if act(&c, &ml)? != ml.scale(expected) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
