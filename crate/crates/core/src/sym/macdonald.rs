//! Macdonald polynomials `P_λ` in the monomial basis.
//!
//! The production path sums the horizontal-strip tableau formula
//! `P_λ = Σ_T ψ_T x^T` with factored denominators; [`gram_schmidt`] is the
//! slower direct orthogonalization, kept as an independent reference.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::tables::{mac_weight, ClassicalTable};
use crate::qt::{one_minus, BinomialProduct, FactoredFraction, QTMonomial, QTRational, Rational};
use crate::shapes::{dominance_leq, Cell, Partition};

#[derive(Debug, Clone)]
pub struct MacTable {
    pub degree: usize,
    /// Row `λ`: `P_λ` in the monomial basis (same indexing as the classical table).
    pub p_in_m: Vec<Vec<QTRational>>,
    /// `⟨P_λ, P_λ⟩_{q,t}`.
    pub norms: Vec<QTRational>,
    /// `∏_{□∈λ} (t^{-l} - q^{a+1})`, so that `M_λ = P_λ / m_const[λ]`.
    pub m_const: Vec<QTRational>,
}

/// `∏_{□∈λ} (t^{-l(□)} - q^{a(□)+1})`.
pub fn m_normalizer(l: &Partition) -> QTRational {
    l.cells()
        .into_iter()
        .map(|c| {
            let (a, leg) = l.arm_leg(c);
            // t^{-l} - q^{a+1} = t^{-l} (1 - q^{a+1} t^{l})
            one_minus(1, QTMonomial::new(a + 1, leg)).mul_monomial(QTMonomial::t(-leg))
        })
        .product()
}

/// `⟨P_λ, P_λ⟩_{q,t} = ∏_{□∈λ} (1 - q^{a+1} t^l) / (1 - q^a t^{l+1})`.
pub fn p_norm(l: &Partition) -> QTRational {
    let (mut n, mut d) = (BinomialProduct::one(), BinomialProduct::one());
    for c in l.cells() {
        let (a, leg) = l.arm_leg(c);
        n = n.mul(&one_minus_bp(QTMonomial::new(a + 1, leg)));
        d = d.mul(&one_minus_bp(QTMonomial::new(a, leg + 1)));
    }
    FactoredFraction::ratio(&n, &d).to_qt()
}

fn one_minus_bp(m: QTMonomial) -> BinomialProduct {
    BinomialProduct::binomial(&Rational::one(), QTMonomial::ONE, &-Rational::one(), m).expect("nontrivial binomial")
}

/// `ψ_{λ/μ} = ∏_{s ∈ R∖C} b_μ(s) / b_λ(s)` with `b_ν(s) = (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l)`,
/// where `R` (`C`) are the rows (columns) of `μ` meeting the strip.
fn psi(lambda: &Partition, mu: &Partition) -> (BinomialProduct, BinomialProduct) {
    let (mut n, mut d) = (BinomialProduct::one(), BinomialProduct::one());
    for (y, &len) in mu.parts().iter().enumerate() {
        if lambda.row(y as i64) == len {
            continue;
        }
        for x in 0..len as i64 {
            if lambda.col(x) != mu.col(x) {
                continue;
            }
            let s = Cell { x, y: y as i64 };
            let (am, lm) = mu.arm_leg(s);
            let (al, ll) = lambda.arm_leg(s);
            n = n.mul(&one_minus_bp(QTMonomial::new(am, lm + 1)));
            n = n.mul(&one_minus_bp(QTMonomial::new(al + 1, ll)));
            d = d.mul(&one_minus_bp(QTMonomial::new(am + 1, lm)));
            d = d.mul(&one_minus_bp(QTMonomial::new(al, ll + 1)));
        }
    }
    (n, d)
}

/// Partitions `ρ ⊆ bound` with `ρ/ν` a horizontal strip of size `k`.
fn horizontal_strips(nu: &Partition, bound: &Partition, k: usize) -> Vec<Partition> {
    fn rec(i: usize, left: usize, nu: &[usize], bound: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == bound.len() {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(Partition::of(&v));
            }
            return;
        }
        let lo = nu.get(i).copied().unwrap_or(0);
        let hi = if i == 0 { bound[0] } else { bound[i].min(nu[i - 1]) };
        if hi < lo {
            return;
        }
        for r in lo..=hi.min(lo + left) {
            cur.push(r);
            rec(i + 1, left - (r - lo), nu, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    let nu_pad: Vec<usize> = (0..bound.len()).map(|i| nu.row(i as i64)).collect();
    rec(0, k, &nu_pad, bound.parts(), &mut vec![], &mut out);
    out
}

/// `P_λ` in monomial coordinates by the tableau formula, one row of the table.
pub fn tableau_row(ct: &ClassicalTable, lambda: &Partition) -> Vec<QTRational> {
    let mut psi_cache: HashMap<(Partition, Partition), (BinomialProduct, BinomialProduct)> = HashMap::new();
    ct.parts
        .iter()
        .map(|mu| {
            if !dominance_leq(mu, lambda) {
                return QTRational::zero();
            }
            let mut states: HashMap<Partition, FactoredFraction> = HashMap::new();
            states.insert(Partition::empty(), FactoredFraction::one());
            for &k in mu.parts() {
                let mut next: HashMap<Partition, FactoredFraction> = HashMap::new();
                for (nu, v) in states.iter() {
                    for rho in horizontal_strips(nu, lambda, k) {
                        let w = psi_cache.entry((rho.clone(), nu.clone())).or_insert_with(|| psi(&rho, nu));
                        let term = v.mul_ratio(&w.0, &w.1);
                        let slot = next.entry(rho).or_default();
                        *slot = slot.add(&term);
                    }
                }
                states = next;
            }
            states.get(lambda).map(|v| v.to_qt()).unwrap_or_else(QTRational::zero)
        })
        .collect()
}

/// Direct Gram–Schmidt of the monomial basis against dominance under the
/// q,t inner product. Returns the rows of `P_λ` in monomial coordinates.
pub fn gram_schmidt(ct: &ClassicalTable) -> Vec<Vec<QTRational>> {
    let dim = ct.dim();
    let w: Vec<QTRational> = (0..dim).map(|r| mac_weight(&ct.parts[r]).scale(&ct.z[r])).collect();
    let pair = |a: &[Rational], b: &[QTRational]| {
        let mut acc = QTRational::zero();
        for r in 0..a.len() {
            if !a[r].is_zero() && !b[r].is_zero() {
                acc += &(&b[r] * &w[r]).scale(&a[r]);
            }
        }
        acc
    };
    let mut p_in_m: Vec<Vec<QTRational>> = vec![];
    let mut p_in_p: Vec<Vec<QTRational>> = vec![];
    let mut norms: Vec<QTRational> = vec![];
    for i in 0..dim {
        let mut pm: Vec<QTRational> =
            (0..dim).map(|j| if i == j { QTRational::one() } else { QTRational::zero() }).collect();
        let mut pp: Vec<QTRational> = ct.m_in_p[i].iter().map(|c| QTRational::from_rational(c.clone())).collect();
        for j in 0..i {
            if !dominance_leq(&ct.parts[j], &ct.parts[i]) {
                continue;
            }
            let c = &pair(&ct.m_in_p[i], &p_in_p[j]) / &norms[j];
            if c.is_zero() {
                continue;
            }
            for r in 0..=j {
                if !p_in_m[j][r].is_zero() {
                    pm[r] = &pm[r] - &(&c * &p_in_m[j][r]);
                }
            }
            for r in 0..dim {
                if !p_in_p[j][r].is_zero() {
                    pp[r] = &pp[r] - &(&c * &p_in_p[j][r]);
                }
            }
        }
        norms.push(pair(&ct.m_in_p[i], &pp));
        p_in_m.push(pm);
        p_in_p.push(pp);
    }
    p_in_m
}

impl MacTable {
    pub fn build(ct: &ClassicalTable) -> Self {
        let rows = ct.parts.iter().map(|l| tableau_row(ct, l)).collect();
        Self::from_monomial_rows(ct, rows)
    }

    /// Completes a table from monomial expansions (computed or cached).
    pub fn from_monomial_rows(ct: &ClassicalTable, p_in_m: Vec<Vec<QTRational>>) -> Self {
        MacTable {
            degree: ct.degree,
            p_in_m,
            norms: ct.parts.iter().map(p_norm).collect(),
            m_const: ct.parts.iter().map(m_normalizer).collect(),
        }
    }

    /// Coordinates in the P basis of a vector given in monomial coordinates.
    pub fn m_to_p_coords(&self, mut f: Vec<QTRational>) -> Vec<QTRational> {
        let dim = f.len();
        let mut out = vec![QTRational::zero(); dim];
        for i in (0..dim).rev() {
            if f[i].is_zero() {
                continue;
            }
            let a = f[i].clone();
            for r in 0..i {
                if !self.p_in_m[i][r].is_zero() {
                    f[r] = &f[r] - &(&a * &self.p_in_m[i][r]);
                }
            }
            out[i] = a;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_formula_matches_gram_schmidt() {
        for d in 0..=4 {
            let ct = ClassicalTable::build(d);
            let gs = gram_schmidt(&ct);
            for (i, l) in ct.parts.iter().enumerate() {
                assert_eq!(tableau_row(&ct, l), gs[i], "degree {d}, {l}");
            }
        }
    }

    #[test]
    fn strips_are_horizontal() {
        let s = horizontal_strips(&Partition::of(&[2, 1]), &Partition::of(&[3, 2, 1]), 2);
        let got: Vec<String> = s.iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["[2,2,1]", "[3,1,1]", "[3,2]"]);
    }
}
