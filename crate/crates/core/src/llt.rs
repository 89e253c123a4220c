//! Ribbon coefficients `θ_m`, iterated Pieri expansions, the m/n and classical
//! LLT generating series, the γ-ratio and collapse-graph experiments.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::qt::{QTMonomial, QTRational};
use crate::ribbons::{
    all_tilings, collapse_graph_of_tilings, enumerate_ribbon_tableaux, minimal_tableau, tableau_from_tiling,
    tiling_height, Ribbon, RibbonError,
};
use crate::shapes::{Partition, SkewShape};
use crate::stable::{vertical_strip_sum, StableError};

#[derive(Debug, thiserror::Error)]
pub enum LltError {
    #[error("ribbon has {got} boxes, expected {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("shape of size {size} is not divisible by {n}")]
    Divisibility { size: usize, n: usize },
    #[error("shape admits no ribbon tableau")]
    NoTableaux,
    #[error("θ/(-s)^ht is not constant: {first} vs {other}")]
    NonConstantRatio { first: String, other: String },
    #[error("tiling cannot be ordered into a tableau")]
    UnorderedTiling,
    #[error(transparent)]
    Ribbon(#[from] RibbonError),
    #[error(transparent)]
    Stable(#[from] StableError),
}

/// `θ_m(B) = (-1)^{ht B} ∏_j χ_j(B)^{⌊mj/n⌋-⌊m(j-1)/n⌋}`, boxes numbered northwest to southeast.
pub fn theta(b: &Ribbon, m: i64, n: usize) -> Result<QTRational, LltError> {
    if b.len() != n {
        return Err(LltError::SizeMismatch { got: b.len(), expected: n });
    }
    let ni = n as i64;
    let mut mono = QTMonomial::default();
    for (j, c) in b.cells().iter().enumerate() {
        let j = j as i64 + 1;
        mono = mono * c.weight().pow((m * j).div_euclid(ni) - (m * (j - 1)).div_euclid(ni));
    }
    Ok(QTRational::term(if b.height() % 2 == 0 { 1 } else { -1 }, mono))
}

pub fn theta_tiling(t: &[Ribbon], m: i64, n: usize) -> Result<QTRational, LltError> {
    t.iter().try_fold(QTRational::one(), |acc, b| Ok(&acc * &theta(b, m, n)?))
}

/// `(-s)^h` with `s = √(t/q)`.
pub fn minus_s_pow(h: i64) -> QTRational {
    QTRational::term(if h % 2 == 0 { 1 } else { -1 }, QTMonomial::s(h))
}

/// `e_{ν_1} ⋯ e_{ν_t} s_μ` in the stable basis, applying `ν_t` first. Any `m`
/// is accepted.
pub fn iterated_pieri(
    mu: &Partition,
    nu: &[usize],
    m: i64,
    n: usize,
) -> Result<BTreeMap<Partition, QTRational>, LltError> {
    let mut cur = BTreeMap::from([(mu.clone(), QTRational::one())]);
    for &k in nu.iter().rev() {
        let mut next: BTreeMap<Partition, QTRational> = BTreeMap::new();
        for (kappa, c) in &cur {
            for (l, d) in vertical_strip_sum(kappa, k, m, n)? {
                let e = next.entry(l).or_insert_with(QTRational::zero);
                *e = &*e + &(c * &d);
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LltSeries {
    pub shape: SkewShape,
    pub n: usize,
    /// `None` for the classical series.
    pub m: Option<i64>,
    pub numvars: usize,
    /// Coefficient of `x^ν`, zero coefficients omitted.
    pub coeffs: BTreeMap<Vec<usize>, QTRational>,
}

impl LltSeries {
    /// Coefficients agree on every pair of permuted exponent vectors.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(nu, c)| nu.iter().copied().permutations(nu.len()).all(|p| self.coeffs.get(&p) == Some(c)))
    }

    pub fn scale(&self, c: &QTRational) -> BTreeMap<Vec<usize>, QTRational> {
        self.coeffs.iter().map(|(nu, v)| (nu.clone(), v * c)).filter(|(_, v)| !v.is_zero()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": {"outer": self.shape.outer.parts(), "inner": self.shape.inner.parts()},
            "n": self.n,
            "m": self.m,
            "vars": self.numvars,
            "coeffs": self.coeffs.iter().map(|(nu, c)| (format!("{nu:?}"), c.to_string())).collect::<BTreeMap<_, _>>(),
        })
    }
}

/// Weak compositions of `total` with `parts` parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn layers_total(sh: &SkewShape, n: usize) -> Result<usize, LltError> {
    if n == 0 || !sh.size().is_multiple_of(n) {
        return Err(LltError::Divisibility { size: sh.size(), n });
    }
    Ok(sh.size() / n)
}

fn series<F>(sh: &SkewShape, n: usize, vars: usize, weight: F) -> Result<BTreeMap<Vec<usize>, QTRational>, LltError>
where
    F: Fn(&[Ribbon], i64) -> Result<QTRational, LltError>,
{
    let total = layers_total(sh, n)?;
    let mut coeffs = BTreeMap::new();
    for nu in compositions(total, vars) {
        let mut c = QTRational::zero();
        for t in enumerate_ribbon_tableaux(sh, n, &nu)? {
            let ribbons: Vec<Ribbon> = t.ribbons().cloned().collect();
            c = &c + &weight(&ribbons, t.height())?;
        }
        if !c.is_zero() {
            coeffs.insert(nu, c);
        }
    }
    Ok(coeffs)
}

/// `G^{m/n}_{λ\μ} = Σ_ν x^ν Σ_{T ∈ K^ν} θ_m(T)` in `vars` variables.
pub fn llt_g(sh: &SkewShape, n: usize, m: i64, vars: usize) -> Result<LltSeries, LltError> {
    let coeffs = series(sh, n, vars, |r, _| theta_tiling(r, m, n))?;
    Ok(LltSeries { shape: sh.clone(), n, m: Some(m), numvars: vars, coeffs })
}

/// `G̃_{λ\μ} = Σ_ν x^ν Σ_T (-s)^{ht T}` with `s = √(t/q)`.
pub fn llt_classic(sh: &SkewShape, n: usize, vars: usize) -> Result<LltSeries, LltError> {
    let coeffs = series(sh, n, vars, |_, h| Ok(minus_s_pow(h)))?;
    Ok(LltSeries { shape: sh.clone(), n, m: None, numvars: vars, coeffs })
}

/// Every tiling of the shape, each checked to come from a ribbon tableau.
pub fn tableau_tilings(sh: &SkewShape, n: usize) -> Result<Vec<Vec<Ribbon>>, LltError> {
    layers_total(sh, n)?;
    let tilings = all_tilings(sh, n);
    for t in &tilings {
        tableau_from_tiling(sh, t.clone()).ok_or(LltError::UnorderedTiling)?;
    }
    Ok(tilings)
}

/// The common value of `θ_m(T)/(-s)^{ht T}` over all tableaux of the shape.
///
/// `θ_m` and the height depend only on the underlying tiling, so every
/// tiling is visited once.
pub fn gamma_ratio(sh: &SkewShape, n: usize, m: i64) -> Result<QTRational, LltError> {
    let tilings = tableau_tilings(sh, n)?;
    let mut ratio: Option<QTRational> = None;
    for t in &tilings {
        let r = theta_tiling(t, m, n)?.checked_div(&minus_s_pow(tiling_height(t))).expect("nonzero");
        match &ratio {
            None => ratio = Some(r),
            Some(first) if *first != r => {
                return Err(LltError::NonConstantRatio { first: first.to_string(), other: r.to_string() })
            }
            _ => {}
        }
    }
    ratio.ok_or(LltError::NoTableaux)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityReport {
    pub tilings: usize,
    pub edges: usize,
    pub components: usize,
    /// The minimal tableau's tiling is a vertex of the graph.
    pub minimal_found: bool,
    /// Every edge joins tilings with heights two apart and θ-ratio `t/q`, for each tested `m`.
    pub edges_ok: bool,
    pub bad_edges: Vec<(usize, usize)>,
}

impl ConnectivityReport {
    pub fn passed(&self) -> bool {
        self.tilings == 0 || (self.components == 1 && self.minimal_found && self.edges_ok)
    }
}

/// Collapse-graph connectivity over all tableau tilings, with per-edge
/// θ-ratio checks for each slope numerator in `ms`.
pub fn connectivity_report(sh: &SkewShape, n: usize, ms: &[i64]) -> Result<ConnectivityReport, LltError> {
    let g = collapse_graph_of_tilings(tableau_tilings(sh, n)?);
    let minimal_found = match minimal_tableau(sh, n) {
        Some(t) => g.index_of(&t.tiling()).is_some(),
        None => g.vertices.is_empty(),
    };
    let tq = QTRational::monomial(QTMonomial::new(-1, 1));
    let mut bad_edges = vec![];
    for &(u, v) in &g.edges {
        let (a, b) = (&g.vertices[u], &g.vertices[v]);
        let (lo, hi) = if tiling_height(a) < tiling_height(b) { (a, b) } else { (b, a) };
        let mut ok = tiling_height(hi) - tiling_height(lo) == 2;
        for &m in ms {
            ok &= theta_tiling(hi, m, n)?.checked_div(&theta_tiling(lo, m, n)?).expect("nonzero") == tq;
        }
        if !ok {
            bad_edges.push((u, v));
        }
    }
    Ok(ConnectivityReport {
        tilings: g.vertices.len(),
        edges: g.edges.len(),
        components: if g.vertices.is_empty() { 0 } else { g.component_count() },
        minimal_found,
        edges_ok: bad_edges.is_empty(),
        bad_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Cell;

    #[test]
    fn vertical_domino_theta() {
        let b = Ribbon::new(vec![Cell::new(0, 0), Cell::new(0, 1)]).unwrap();
        assert_eq!(theta(&b, 1, 2).unwrap(), QTRational::from_int(-1));
        assert_eq!(theta(&b, 0, 2).unwrap(), QTRational::from_int(-1));
        assert!(matches!(theta(&b, 1, 3), Err(LltError::SizeMismatch { .. })));
    }

    #[test]
    fn single_box_theta() {
        let b = Ribbon::new(vec![Cell::new(2, 1)]).unwrap();
        assert_eq!(theta(&b, 3, 1).unwrap(), QTRational::monomial(Cell::new(2, 1).weight().pow(3)));
    }

    #[test]
    fn composition_count() {
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
    }
}
