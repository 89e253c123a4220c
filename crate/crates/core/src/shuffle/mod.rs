//! Shuffle-algebra kernels `P_k^{m/n}` and `E_k^{m/n}`.
//!
//! A kernel is never expanded as a symmetric rational function. It is a
//! template for the single pre-symmetrization term, which the evaluators
//! substitute and sum over all arrangements of the evaluation point.

mod numeric;
mod series;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::qt::{one_minus, QTMonomial, QTRational, Rational};
use crate::shapes::{Cell, SkewShape};

pub use numeric::{
    eval_numeric, invert_check_numeric, invert_check_trials, random_point, wheel_check, wheel_check_trials,
};
pub use series::Expansion;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    #[error("invalid kernel parameters: {0}")]
    BadParameters(String),
    #[error("evaluation point has {got} boxes, kernel needs {want}")]
    CountMismatch { got: usize, want: usize },
    #[error("a denominator vanishes identically at the evaluation point")]
    Pole,
    #[error("negative powers of (eps - 1) survive the symmetrization")]
    PoleAtTarget,
    #[error("the limit is infinite: nonzero coefficient at order {0}")]
    InfiniteLimit(i64),
    #[error("cannot parse kernel descriptor {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    P,
    E,
    /// The single-variable monomial `z_1^m`, image of `p_{1,m}`.
    Z,
}

/// `r_{m/n}(i) = ⌈mi/n⌉ - ⌈m(i-1)/n⌉`.
pub fn slope_exponent(m: i64, n: usize, i: usize) -> i64 {
    let n = n as i64;
    let i = i as i64;
    Integer::div_ceil(&(m * i), &n) - Integer::div_ceil(&(m * (i - 1)), &n)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShuffleKernel {
    pub family: Family,
    pub k: usize,
    pub m: i64,
    pub n: usize,
    exponents: Vec<i64>,
    omega_defect: bool,
}

impl ShuffleKernel {
    pub fn new(family: Family, k: usize, m: i64, n: usize) -> Result<Self, ShuffleError> {
        if n == 0 || k == 0 {
            return Err(ShuffleError::BadParameters(format!("need k, n >= 1, got k={k}, n={n}")));
        }
        if family == Family::Z && (k, n) != (1, 1) {
            return Err(ShuffleError::BadParameters(format!("Z kernels have k = n = 1, got k={k}, n={n}")));
        }
        if m.gcd(&(n as i64)) != 1 {
            return Err(ShuffleError::BadParameters(format!("gcd({m}, {n}) != 1")));
        }
        let exponents = (1..=k * n).map(|i| slope_exponent(m, n, i)).collect();
        Ok(ShuffleKernel { family, k, m, n, exponents, omega_defect: false })
    }

    pub fn p(k: usize, m: i64, n: usize) -> Result<Self, ShuffleError> {
        Self::new(Family::P, k, m, n)
    }

    pub fn e(k: usize, m: i64, n: usize) -> Result<Self, ShuffleError> {
        Self::new(Family::E, k, m, n)
    }

    /// `z_1^m`; `z(0)` is the constant kernel `1` in one variable.
    pub fn z(m: i64) -> Self {
        Self::new(Family::Z, 1, m, 1).expect("valid parameters")
    }

    /// Number of variables `N = kn`.
    pub fn n_vars(&self) -> usize {
        self.k * self.n
    }

    /// Homogeneous degree `M = km`.
    pub fn degree(&self) -> i64 {
        self.k as i64 * self.m
    }

    /// The exponents of `z_1, …, z_N` in the monomial prefactor.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// The same kernel with its monomial exponents replaced; used to build
    /// negative controls.
    pub fn with_exponents(&self, exponents: Vec<i64>) -> Self {
        assert_eq!(exponents.len(), self.n_vars());
        ShuffleKernel { exponents, ..self.clone() }
    }

    /// A negative control: every `ω` factor loses one power of `(t - x)`.
    /// The result violates the wheel conditions.
    pub fn corrupted(&self) -> Self {
        ShuffleKernel { omega_defect: true, ..self.clone() }
    }

    /// The kernel of slope `-m/n`.
    pub fn negated_slope(&self) -> Self {
        Self::new(self.family, self.k, -self.m, self.n).expect("valid parameters")
    }

    pub(crate) fn template(&self) -> Template {
        Template::of_kernel(self)
    }
}

impl fmt::Display for ShuffleKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::P => "P",
            Family::E => "E",
            Family::Z => return write!(f, "Z[{}]", self.m),
        };
        write!(f, "{fam}[k={},m={},n={}]", self.k, self.m, self.n)
    }
}

impl FromStr for ShuffleKernel {
    type Err = ShuffleError;

    /// Accepts `E[k=2,m=1,n=2]`, the short form `E[2,1/2]` and `Z[m]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ShuffleError::Parse(s.to_string());
        let s2: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let family = match s2.chars().next() {
            Some('P') | Some('p') => Family::P,
            Some('E') | Some('e') => Family::E,
            Some('Z') | Some('z') => Family::Z,
            _ => return Err(bad()),
        };
        let inner = s2[1..].strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        if family == Family::Z {
            return Ok(ShuffleKernel::z(inner.parse().map_err(|_| bad())?));
        }
        let (mut k, mut m, mut n) = (None, None, None);
        if inner.contains('=') {
            for part in inner.split(',') {
                let (key, val) = part.split_once('=').ok_or_else(bad)?;
                match key {
                    "k" => k = Some(val.parse::<usize>().map_err(|_| bad())?),
                    "m" => m = Some(val.parse::<i64>().map_err(|_| bad())?),
                    "n" => n = Some(val.parse::<usize>().map_err(|_| bad())?),
                    _ => return Err(bad()),
                }
            }
        } else {
            let (ks, slope) = inner.split_once(',').ok_or_else(bad)?;
            k = Some(ks.parse().map_err(|_| bad())?);
            let (ms, ns) = slope.split_once('/').unwrap_or((slope, "1"));
            m = Some(ms.parse().map_err(|_| bad())?);
            n = Some(ns.parse().map_err(|_| bad())?);
        }
        ShuffleKernel::new(family, k.ok_or_else(bad)?, m.ok_or_else(bad)?, n.unwrap_or(1))
    }
}

/// `ω(x) = (1 - xq)(t - x) / ((1 - x)(t - xq))`.
pub fn omega(x: &QTRational) -> QTRational {
    let one = QTRational::one();
    let q = QTRational::q();
    let t = QTRational::t();
    let xq = x * &q;
    let num = &(&one - &xq) * &(&t - x);
    let den = &(&one - x) * &(&t - &xq);
    num.checked_div(&den).expect("omega has a pole at this argument")
}

/// A monomial `c · ∏ z_v^{e_v}` in the positional variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VarMono {
    pub qt: QTMonomial,
    pub vars: Vec<(usize, i64)>,
}

impl VarMono {
    fn constant(qt: QTMonomial) -> Self {
        VarMono { qt, vars: vec![] }
    }

    fn ratio(qt: QTMonomial, i: usize, j: usize) -> Self {
        VarMono { qt, vars: vec![(i, 1), (j, -1)] }
    }

    fn shifted(&self, by: usize) -> Self {
        VarMono { qt: self.qt, vars: self.vars.iter().map(|&(v, e)| (v + by, e)).collect() }
    }
}

/// A binomial `a - b`.
pub(crate) type Binom = (VarMono, VarMono);

/// The pre-symmetrization term `constant · monos · Π num / Π den · Π psums`.
#[derive(Debug, Clone)]
pub(crate) struct Template {
    pub n_vars: usize,
    pub constant: QTRational,
    pub monos: Vec<VarMono>,
    pub num: Vec<Binom>,
    pub den: Vec<Binom>,
    pub psums: Vec<Vec<VarMono>>,
}

fn t_factorial(k: usize) -> QTRational {
    // [x]_t = t^{1-x} - t
    (1..=k as i64)
        .map(|x| &QTRational::monomial(QTMonomial::t(1 - x)) - &QTRational::t())
        .fold(QTRational::one(), |a, b| &a * &b)
}

fn omega_factors(i: usize, j: usize, num: &mut Vec<Binom>, den: &mut Vec<Binom>, defect: bool) {
    let one = VarMono::constant(QTMonomial::ONE);
    let t = VarMono::constant(QTMonomial::t(1));
    num.push((one.clone(), VarMono::ratio(QTMonomial::q(1), i, j)));
    if !defect {
        num.push((t.clone(), VarMono::ratio(QTMonomial::ONE, i, j)));
    }
    den.push((one, VarMono::ratio(QTMonomial::ONE, i, j)));
    den.push((t, VarMono::ratio(QTMonomial::q(1), i, j)));
}

impl Template {
    fn of_kernel(kernel: &ShuffleKernel) -> Self {
        let big_n = kernel.n_vars();
        let (k, n) = (kernel.k, kernel.n);
        if kernel.family == Family::Z {
            let vars = if kernel.m == 0 { vec![] } else { vec![(0, kernel.m)] };
            return Template {
                n_vars: 1,
                constant: QTRational::one(),
                monos: vec![VarMono { qt: QTMonomial::ONE, vars }],
                num: vec![],
                den: vec![],
                psums: vec![],
            };
        }
        let pre = one_minus(1, QTMonomial::t(1)) * one_minus(1, QTMonomial::q(1));
        let pre = pre.checked_div(&(&QTRational::t() - &QTRational::q())).expect("t != q");
        let mut constant = pre.pow(big_n as i64).expect("nonzero");
        let one = VarMono::constant(QTMonomial::ONE);
        let mut num = vec![];
        let mut den = vec![];
        let mut psums = vec![];
        let vars: Vec<(usize, i64)> =
            kernel.exponents.iter().enumerate().filter(|(_, e)| **e != 0).map(|(i, e)| (i, *e)).collect();
        let monos = vec![VarMono { qt: QTMonomial::ONE, vars }];
        match kernel.family {
            Family::E => {
                constant = constant.checked_div(&t_factorial(k)).expect("[k]!_t != 0");
                for i in 1..k {
                    let qt = QTMonomial::new(-1, 1 - i as i64);
                    num.push((one.clone(), VarMono::ratio(qt, i * n - 1, i * n)));
                }
            }
            Family::Z => unreachable!(),
            Family::P => {
                constant = constant.checked_div(&one_minus(1, QTMonomial::t(k as i64))).expect("1 - t^k != 0");
                let sum = (0..k)
                    .map(|i| {
                        let mut vars = vec![];
                        for j in 1..=i {
                            vars.push((j * n - 1, 1));
                            vars.push((j * n, -1));
                        }
                        VarMono { qt: QTMonomial::new(-(i as i64), i as i64), vars }
                    })
                    .collect();
                psums.push(sum);
            }
        }
        for i in 0..big_n.saturating_sub(1) {
            den.push((one.clone(), VarMono::ratio(QTMonomial::new(-1, 1), i, i + 1)));
        }
        for i in 0..big_n {
            for j in i + 1..big_n {
                omega_factors(i, j, &mut num, &mut den, kernel.omega_defect);
            }
        }
        Template { n_vars: big_n, constant, monos, num, den, psums }
    }

    /// Template of the shuffle product `a * b`. The symmetrizations of the
    /// factors are absorbed into the outer one at the cost of `N_a! N_b!`.
    pub(crate) fn shuffle(a: &Template, b: &Template) -> Template {
        let off = a.n_vars;
        let fact = |n: usize| (1..=n as i64).product::<i64>();
        let constant =
            (&a.constant * &b.constant).scale(&Rational::from_integer((fact(a.n_vars) * fact(b.n_vars)).into()));
        let mut num = a.num.clone();
        let mut den = a.den.clone();
        num.extend(b.num.iter().map(|(x, y)| (x.shifted(off), y.shifted(off))));
        den.extend(b.den.iter().map(|(x, y)| (x.shifted(off), y.shifted(off))));
        for i in 0..a.n_vars {
            for j in off..off + b.n_vars {
                omega_factors(i, j, &mut num, &mut den, false);
            }
        }
        let mut monos = a.monos.clone();
        monos.extend(b.monos.iter().map(|m| m.shifted(off)));
        let mut psums = a.psums.clone();
        psums.extend(b.psums.iter().map(|s| s.iter().map(|m| m.shifted(off)).collect()));
        Template { n_vars: a.n_vars + b.n_vars, constant, monos, num, den, psums }
    }
}

/// One box of an evaluation point: its weight and the exponent of the
/// auxiliary deformation parameter attached to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointBox {
    pub weight: QTMonomial,
    pub deform: i64,
}

/// A multiset of box weights. Boxes built from rows carry the row's
/// deformation exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationPoint {
    pub boxes: Vec<PointBox>,
}

impl EvaluationPoint {
    /// Rows `(base, length)`; row `i` has boxes `base · q^j` and deformation exponent `i`.
    pub fn from_rows(rows: &[(QTMonomial, usize)]) -> Self {
        let boxes = rows
            .iter()
            .enumerate()
            .flat_map(|(i, &(base, len))| {
                (0..len as i64).map(move |j| PointBox { weight: base * QTMonomial::q(j), deform: i as i64 })
            })
            .collect();
        EvaluationPoint { boxes }
    }

    /// The boxes of a skew shape, rows taken from the top down.
    pub fn from_skew(sh: &SkewShape) -> Self {
        let rows: Vec<(QTMonomial, usize)> =
            sh.rows_top_down().into_iter().map(|(y, a, b)| (Cell::new(a, y).weight(), (b - a) as usize)).collect();
        Self::from_rows(&rows)
    }

    /// Explicit cells; each cell is deformed by its row index.
    pub fn from_cells(cells: &[Cell]) -> Self {
        EvaluationPoint { boxes: cells.iter().map(|c| PointBox { weight: c.weight(), deform: c.y }).collect() }
    }

    /// Undeformed generic weights.
    pub fn from_weights(ws: &[QTMonomial]) -> Self {
        EvaluationPoint { boxes: ws.iter().map(|&w| PointBox { weight: w, deform: 0 }).collect() }
    }

    /// The single row `1, q, …, q^{N-1}`.
    pub fn single_row(len: usize) -> Self {
        Self::from_rows(&[(QTMonomial::ONE, len)])
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn weights(&self) -> Vec<QTMonomial> {
        self.boxes.iter().map(|b| b.weight).collect()
    }

    /// Replaces the deformation exponents, which must be one per box.
    pub fn with_deformation(&self, deform: &[i64]) -> Self {
        assert_eq!(deform.len(), self.len());
        let boxes = self.boxes.iter().zip(deform).map(|(b, &d)| PointBox { weight: b.weight, deform: d }).collect();
        EvaluationPoint { boxes }
    }

    /// Applies `f` to every deformation exponent.
    pub fn map_deformation<F: Fn(i64) -> i64>(&self, f: F) -> Self {
        let boxes = self.boxes.iter().map(|b| PointBox { weight: b.weight, deform: f(b.deform) }).collect();
        EvaluationPoint { boxes }
    }

    pub fn scaled(&self, c: QTMonomial) -> Self {
        let boxes = self.boxes.iter().map(|b| PointBox { weight: b.weight * c, deform: b.deform }).collect();
        EvaluationPoint { boxes }
    }

    /// All weights inverted; deformation exponents are negated with them.
    pub fn inverted(&self) -> Self {
        let boxes = self.boxes.iter().map(|b| PointBox { weight: b.weight.inv(), deform: -b.deform }).collect();
        EvaluationPoint { boxes }
    }
}

fn check_count(want: usize, pt: &EvaluationPoint) -> Result<(), ShuffleError> {
    if pt.len() != want {
        return Err(ShuffleError::CountMismatch { got: pt.len(), want });
    }
    Ok(())
}

fn limit_at_target(
    tpl: &Template,
    pt: &EvaluationPoint,
    mode: Expansion,
    target: i64,
) -> Result<QTRational, ShuffleError> {
    let coeffs = series::sym_series(tpl, pt, mode, target)?;
    for (&o, c) in coeffs.iter() {
        if o < target && !c.is_zero() {
            return Err(match mode {
                Expansion::EpsToOne => ShuffleError::PoleAtTarget,
                Expansion::XiToInfinity => ShuffleError::InfiniteLimit(o),
            });
        }
    }
    Ok(coeffs.get(&target).cloned().unwrap_or_else(QTRational::zero))
}

/// The single pre-symmetrization term at the given arrangement of weights
/// (position `i` gets `weights[i]`). Fails if the term itself has a pole.
pub fn kernel_term(kernel: &ShuffleKernel, weights: &[QTMonomial]) -> Result<QTRational, ShuffleError> {
    check_count(kernel.n_vars(), &EvaluationPoint::from_weights(weights))?;
    series::single_term(&kernel.template(), weights)
}

/// `R(λ\μ)`: the symmetrized kernel at a multiset of box weights, with the
/// per-box deformation `w ↦ w ε^d` removed by taking `ε → 1`.
pub fn sym_evaluate(kernel: &ShuffleKernel, pt: &EvaluationPoint) -> Result<QTRational, ShuffleError> {
    check_count(kernel.n_vars(), pt)?;
    limit_at_target(&kernel.template(), pt, Expansion::EpsToOne, 0)
}

/// The shuffle product `K1 * K2` evaluated at `pt`.
pub fn shuffle_product_eval(
    k1: &ShuffleKernel,
    k2: &ShuffleKernel,
    pt: &EvaluationPoint,
) -> Result<QTRational, ShuffleError> {
    let tpl = Template::shuffle(&k1.template(), &k2.template());
    check_count(tpl.n_vars, pt)?;
    limit_at_target(&tpl, pt, Expansion::EpsToOne, 0)
}

/// Doubled exponent `-(MN - M + N - k)` of `q` in the normalizer of `φ`.
pub fn phi_q_exponent2(kernel: &ShuffleKernel) -> i64 {
    let big_m = kernel.degree();
    let big_n = kernel.n_vars() as i64;
    -(big_m * big_n - big_m + big_n - kernel.k as i64)
}

/// `φ(R) = R(1, q, …, q^{N-1}) q^{-(MN-M+N-k)/2} ∏_{i=1}^N (t - q^i)/(1 - q^i)`.
pub fn phi_norm_kernel(kernel: &ShuffleKernel) -> Result<QTRational, ShuffleError> {
    let big_n = kernel.n_vars();
    let v = sym_evaluate(kernel, &EvaluationPoint::single_row(big_n))?;
    let mut r = v.mul_monomial(QTMonomial::from_doubled(phi_q_exponent2(kernel), 0));
    for i in 1..=big_n as i64 {
        let num = &QTRational::t() - &QTRational::monomial(QTMonomial::q(i));
        r = &(&r * &num) / &one_minus(1, QTMonomial::q(i));
    }
    Ok(r)
}

/// Coefficients of the symmetrized kernel at `left ∪ right` with the left
/// weights multiplied by `ξ`, as a Laurent series in `1/ξ`: entry `o` is the
/// coefficient of `ξ^{-o}`. Orders above `max_order` are not computed.
pub fn xi_series(
    kernel: &ShuffleKernel,
    left: &EvaluationPoint,
    right: &EvaluationPoint,
    max_order: i64,
) -> Result<std::collections::BTreeMap<i64, QTRational>, ShuffleError> {
    let pt = scaled_union(left, right);
    check_count(kernel.n_vars(), &pt)?;
    series::sym_series(&kernel.template(), &pt, Expansion::XiToInfinity, max_order)
}

fn scaled_union(left: &EvaluationPoint, right: &EvaluationPoint) -> EvaluationPoint {
    let mut boxes: Vec<PointBox> = left.boxes.iter().map(|b| PointBox { weight: b.weight, deform: -1 }).collect();
    boxes.extend(right.boxes.iter().map(|b| PointBox { weight: b.weight, deform: 0 }));
    EvaluationPoint { boxes }
}

/// `lim_{ξ→∞} R(ξ·left, right) / ξ^{ml}`.
pub fn coproduct_limit(
    kernel: &ShuffleKernel,
    l: usize,
    left: &EvaluationPoint,
    right: &EvaluationPoint,
) -> Result<QTRational, ShuffleError> {
    if l == 0 || l >= kernel.k {
        return Err(ShuffleError::BadParameters(format!("need 0 < l < k, got l={l}")));
    }
    if left.len() != l * kernel.n {
        return Err(ShuffleError::CountMismatch { got: left.len(), want: l * kernel.n });
    }
    let pt = scaled_union(left, right);
    check_count(kernel.n_vars(), &pt)?;
    limit_at_target(&kernel.template(), &pt, Expansion::XiToInfinity, -(kernel.m * l as i64))
}

/// Whether the `ξ`-degree of `R(ξ·left, right)` is strictly below
/// `m·|left|/n`.
pub fn xi_degree_below(
    kernel: &ShuffleKernel,
    left: &EvaluationPoint,
    right: &EvaluationPoint,
) -> Result<bool, ShuffleError> {
    let i = left.len() as i64;
    let bound = Integer::div_floor(&(-kernel.m * i), &(kernel.n as i64));
    let coeffs = xi_series(kernel, left, right, bound)?;
    Ok(coeffs.values().all(|c| c.is_zero()))
}

/// `P_k^{m/n}(z^{-1}) = P_k^{-m/n}(z)` at `pt`.
pub fn invert_check(kernel: &ShuffleKernel, pt: &EvaluationPoint) -> Result<bool, ShuffleError> {
    let a = sym_evaluate(kernel, &pt.inverted())?;
    let b = sym_evaluate(&kernel.negated_slope(), pt)?;
    Ok(a == b)
}

/// The hook `μ_l = (nk - l + 1, 1^{l-1})`.
pub fn hook_point(k: usize, n: usize, l: usize) -> EvaluationPoint {
    let mut parts = vec![n * k - l + 1];
    parts.extend(std::iter::repeat_n(1, l - 1));
    EvaluationPoint::from_skew(&SkewShape::straight(crate::shapes::Partition::of(&parts)))
}

/// Closed form of `P_k^{m/n}(μ_l)`.
pub fn eval_hook(k: usize, m: i64, n: usize, l: usize) -> Result<QTRational, ShuffleError> {
    ShuffleKernel::p(k, m, n)?;
    let big_n = n * k;
    if l == 0 || l > big_n {
        return Err(ShuffleError::BadParameters(format!("need 1 <= l <= {big_n}, got {l}")));
    }
    let ni = n as i64;
    let mut sum = QTRational::zero();
    for i in 0..ni {
        let qe: i64 = (1..=(big_n - l) as i64).map(|j| Integer::div_floor(&(m * j + i), &ni)).sum();
        let te: i64 = (1..l as i64).map(|j| Integer::div_ceil(&(m * j - i), &ni)).sum();
        sum += &QTRational::monomial(QTMonomial::new(qe, -te));
    }
    let frac = |a: QTMonomial, b: QTMonomial| &one_minus(1, a) / &one_minus(1, b);
    let mut c = frac(QTMonomial::q(-(k as i64)), QTMonomial::new(-1, 1));
    for i in 1..=(big_n - l) as i64 {
        c = &c * &frac(QTMonomial::q(-i), QTMonomial::new(-i - 1, 1));
    }
    for i in 1..l as i64 {
        c = &c * &frac(QTMonomial::t(i), QTMonomial::new(-1, i + 1));
    }
    Ok(&sum * &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_exponents_sum_to_m() {
        for (m, n) in [(1, 2), (2, 3), (-1, 2), (3, 1), (0, 1), (-5, 3)] {
            let k = ShuffleKernel::e(2, m, n).unwrap();
            assert_eq!(k.exponents().iter().sum::<i64>(), 2 * m);
        }
        // Ceilings: r(i) = ⌈mi/n⌉ - ⌈m(i-1)/n⌉.
        assert_eq!(ShuffleKernel::e(1, 1, 2).unwrap().exponents(), &[1, 0]);
        assert_eq!(ShuffleKernel::e(1, 2, 3).unwrap().exponents(), &[1, 1, 0]);
    }

    #[test]
    fn descriptor_round_trip() {
        let k: ShuffleKernel = "E[k=2,m=1,n=2]".parse().unwrap();
        assert_eq!(k, ShuffleKernel::e(2, 1, 2).unwrap());
        assert_eq!(k.to_string(), "E[k=2,m=1,n=2]");
        let p: ShuffleKernel = "P[1,-1/3]".parse().unwrap();
        assert_eq!(p, ShuffleKernel::p(1, -1, 3).unwrap());
        assert!("E[k=1,m=2,n=2]".parse::<ShuffleKernel>().is_err());
        assert!("X[1,1]".parse::<ShuffleKernel>().is_err());
    }

    #[test]
    fn omega_examples() {
        assert!(omega(&QTRational::zero()).is_one());
        // Zeros at x = t and x = 1/q.
        assert!(omega(&QTRational::t()).is_zero());
        assert!(omega(&QTRational::monomial(QTMonomial::q(-1))).is_zero());
    }

    #[test]
    fn hook_closed_form_example() {
        let got = eval_hook(1, 1, 2, 1).unwrap();
        let qi = QTMonomial::q(-1);
        let a = one_minus(1, qi);
        let want = &(&(&QTRational::one() + &QTRational::q()) * &(&a * &a))
            / &(&one_minus(1, QTMonomial::new(-1, 1)) * &one_minus(1, QTMonomial::new(-2, 1)));
        assert_eq!(got, want);
    }
}
