//! Transition matrices over Q between the classical bases, one degree at a time.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::qt::{QTRational, Rational};
use crate::shapes::{enumerate_partitions, Partition};

pub type Mat = Vec<Vec<Rational>>;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `z_λ = ∏ i^{m_i} m_i!`.
pub fn z_lambda(l: &Partition) -> Rational {
    let mut counts: HashMap<usize, i64> = HashMap::new();
    for &p in l.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut z = Rational::one();
    for (part, m) in counts {
        for i in 1..=m {
            z *= rat(part as i64) * rat(i);
        }
    }
    z
}

/// `∏ (1 - q^{ρ_i}) / (1 - t^{ρ_i})`, the Macdonald weight of `p_ρ` relative to the Hall one.
pub fn mac_weight(rho: &Partition) -> QTRational {
    use crate::qt::{one_minus, QTMonomial};
    rho.parts()
        .iter()
        .map(|&k| &one_minus(1, QTMonomial::q(k as i64)) / &one_minus(1, QTMonomial::t(k as i64)))
        .product()
}

/// Classical transition data for a single degree. Partitions are indexed in
/// increasing lexicographic order, a linear extension of dominance.
#[derive(Debug)]
pub struct ClassicalTable {
    pub degree: usize,
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub z: Vec<Rational>,
    /// Row `ρ`: `p_ρ` in the monomial basis.
    pub p_in_m: Mat,
    pub m_in_p: Mat,
    pub e_in_p: Mat,
    pub p_in_e: Mat,
    pub h_in_p: Mat,
    pub p_in_h: Mat,
    pub s_in_m: Mat,
    pub s_in_p: Mat,
    pub p_in_s: Mat,
    pub e_in_m: Mat,
    pub m_in_e: Mat,
    pub h_in_m: Mat,
    pub m_in_h: Mat,
    pub m_in_s: Mat,
}

/// Number of ways to distribute the parts of `rho` into slots with sums `lambda`.
fn distribute(rho: &[usize], slots: &mut Vec<usize>) -> i64 {
    let Some((&first, rest)) = rho.split_first() else {
        return slots.iter().all(|&s| s == 0) as i64;
    };
    let mut total = 0;
    for i in 0..slots.len() {
        if slots[i] >= first {
            slots[i] -= first;
            total += distribute(rest, slots);
            slots[i] += first;
        }
    }
    total
}

pub fn invert(a: &Mat) -> Mat {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.clone();
    let mut inv: Mat =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible transition matrix");
        m.swap(col, piv);
        inv.swap(col, piv);
        let d = m[col][col].clone();
        for j in 0..n {
            m[col][j] = &m[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let a = &m[col][j] * &f;
                    m[r][j] -= a;
                    let b = &inv[col][j] * &f;
                    inv[r][j] -= b;
                }
            }
        }
    }
    inv
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = Rational::zero();
                    for l in 0..k {
                        if !a[i][l].is_zero() && !b[l][j].is_zero() {
                            s += &a[i][l] * &b[l][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// `e_n` or `h_n` in power sums: `Σ_ρ sign_ρ / z_ρ p_ρ`.
fn single_in_p(n: usize, signed: bool) -> Vec<(Partition, Rational)> {
    enumerate_partitions(n)
        .map(|rho| {
            let mut c = Rational::one() / z_lambda(&rho);
            if signed && (n - rho.len()) % 2 == 1 {
                c = -c;
            }
            (rho, c)
        })
        .collect()
}

fn product_in_p(l: &Partition, signed: bool, table_index: &HashMap<Partition, usize>, dim: usize) -> Vec<Rational> {
    let mut acc: Vec<(Vec<usize>, Rational)> = vec![(vec![], Rational::one())];
    for &k in l.parts() {
        let single = single_in_p(k, signed);
        let mut next = vec![];
        for (parts, c) in &acc {
            for (rho, d) in &single {
                let mut v = parts.clone();
                v.extend_from_slice(rho.parts());
                next.push((v, c * d));
            }
        }
        acc = next;
    }
    let mut row = vec![Rational::zero(); dim];
    for (mut parts, c) in acc {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let rho = Partition::new(parts).unwrap();
        row[table_index[&rho]] += c;
    }
    row
}

impl ClassicalTable {
    pub fn build(degree: usize) -> Self {
        let mut parts: Vec<Partition> = enumerate_partitions(degree).collect();
        parts.sort();
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let dim = parts.len();
        let z: Vec<Rational> = parts.iter().map(z_lambda).collect();
        let p_in_m: Mat = parts
            .iter()
            .map(|rho| {
                parts
                    .iter()
                    .map(|l| {
                        if l.len() > rho.len() {
                            Rational::zero()
                        } else {
                            rat(distribute(rho.parts(), &mut l.parts().to_vec()))
                        }
                    })
                    .collect()
            })
            .collect();
        let m_in_p = invert(&p_in_m);
        let e_in_p: Mat = parts.iter().map(|l| product_in_p(l, true, &index, dim)).collect();
        let h_in_p: Mat = parts.iter().map(|l| product_in_p(l, false, &index, dim)).collect();
        // Schur functions by Gram-Schmidt under the Hall product, in increasing dominance.
        let hall = |a: &[Rational], b: &[Rational]| -> Rational {
            (0..dim).map(|r| &a[r] * &b[r] * &z[r]).fold(Rational::zero(), |x, y| x + y)
        };
        let mut s_in_m: Mat = vec![];
        let mut s_in_p: Mat = vec![];
        for (i, l) in parts.iter().enumerate() {
            let mut sm: Vec<Rational> =
                (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect();
            let mut sp = m_in_p[i].clone();
            for j in 0..i {
                if !crate::shapes::dominance_leq(&parts[j], l) {
                    continue;
                }
                let c = hall(&m_in_p[i], &s_in_p[j]) / hall(&s_in_p[j], &s_in_p[j]);
                if c.is_zero() {
                    continue;
                }
                for r in 0..dim {
                    sm[r] -= &c * &s_in_m[j][r];
                    sp[r] -= &c * &s_in_p[j][r];
                }
            }
            s_in_m.push(sm);
            s_in_p.push(sp);
        }
        let p_in_e = invert(&e_in_p);
        let p_in_h = invert(&h_in_p);
        let p_in_s = invert(&s_in_p);
        let e_in_m = matmul(&e_in_p, &p_in_m);
        let h_in_m = matmul(&h_in_p, &p_in_m);
        let m_in_e = invert(&e_in_m);
        let m_in_h = invert(&h_in_m);
        let m_in_s = invert(&s_in_m);
        ClassicalTable {
            degree,
            parts,
            index,
            z,
            p_in_m,
            m_in_p,
            e_in_p,
            p_in_e,
            h_in_p,
            p_in_h,
            s_in_m,
            s_in_p,
            p_in_s,
            e_in_m,
            m_in_e,
            h_in_m,
            m_in_h,
            m_in_s,
        }
    }

    pub fn dim(&self) -> usize {
        self.parts.len()
    }
}
