//! The ring of symmetric functions over Q(q,t), truncated by degree.
//!
//! Coefficients are [`QTRational`]; every basis change passes through the
//! monomial basis of the relevant degree. Macdonald tables are built once per
//! degree (optionally persisted through [`cache`]) and shared afterwards.

pub mod cache;
mod macdonald;
mod tables;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex, OnceLock, RwLock};

use num_traits::Zero;
use serde_json::Value;

pub use macdonald::{gram_schmidt, m_normalizer, p_norm, tableau_row, MacTable};
pub use tables::{mac_weight, z_lambda, ClassicalTable, Mat};

use crate::qt::{QTMonomial, QTRational, Rational};
use crate::shapes::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("cache corrupt: {0}")]
    CacheCorrupt(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("unknown basis {0:?}")]
    UnknownBasis(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymConfig {
    pub degree_bound: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for SymConfig {
    fn default() -> Self {
        SymConfig { degree_bound: 8, cache_dir: None }
    }
}

static CONFIG: LazyLock<RwLock<SymConfig>> = LazyLock::new(|| RwLock::new(SymConfig::default()));

pub fn set_config(c: SymConfig) {
    *CONFIG.write().unwrap() = c;
}

pub fn config() -> SymConfig {
    CONFIG.read().unwrap().clone()
}

fn check_bound(degree: usize) -> Result<(), SymError> {
    let bound = config().degree_bound;
    if degree > bound {
        Err(SymError::DegreeBound { degree, bound })
    } else {
        Ok(())
    }
}

type Slots<T> = LazyLock<Mutex<HashMap<usize, Arc<OnceLock<Arc<T>>>>>>;
static CLASSICAL: Slots<ClassicalTable> = LazyLock::new(|| Mutex::new(HashMap::new()));
static MACDONALD: Slots<MacTable> = LazyLock::new(|| Mutex::new(HashMap::new()));
static CACHE_WRITE: Mutex<()> = Mutex::new(());

fn slot<T>(slots: &Slots<T>, d: usize) -> Arc<OnceLock<Arc<T>>> {
    slots.lock().unwrap().entry(d).or_default().clone()
}

/// Classical transition matrices of degree `d` (not subject to the bound).
pub fn classical_table(d: usize) -> Arc<ClassicalTable> {
    slot(&CLASSICAL, d).get_or_init(|| Arc::new(ClassicalTable::build(d))).clone()
}

/// Macdonald table of degree `d`, from the disk cache when configured.
pub fn macdonald_table(d: usize) -> Result<Arc<MacTable>, SymError> {
    check_bound(d)?;
    let cell = slot(&MACDONALD, d);
    if let Some(t) = cell.get() {
        return Ok(t.clone());
    }
    let ct = classical_table(d);
    let dir = config().cache_dir;
    let mut err = None;
    let table = cell.get_or_init(|| {
        if let Some(dir) = &dir {
            match cache::load_degree(dir, &ct) {
                Ok(Some(rows)) => return Arc::new(MacTable::from_monomial_rows(&ct, rows)),
                Ok(None) => {}
                Err(e) => {
                    err = Some(e);
                    return Arc::new(MacTable::build(&ct));
                }
            }
            let t = MacTable::build(&ct);
            let _guard = CACHE_WRITE.lock().unwrap();
            if let Err(e) = cache::store_degree(dir, &ct, &t) {
                err = Some(e);
            }
            Arc::new(t)
        } else {
            Arc::new(MacTable::build(&ct))
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(table.clone()),
    }
}

/// Drops the in-memory Macdonald tables (the next access reloads or rebuilds).
pub fn reset_memory_cache() {
    MACDONALD.lock().unwrap().clear();
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    PowerSum,
    Elementary,
    Homogeneous,
    Schur,
    MacP,
    MacM,
}

impl Basis {
    pub const ALL: [Basis; 7] = [
        Basis::Monomial,
        Basis::PowerSum,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::Schur,
        Basis::MacP,
        Basis::MacM,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::Schur => "s",
            Basis::MacP => "P",
            Basis::MacM => "M",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        Basis::ALL.into_iter().find(|b| b.symbol() == s).ok_or_else(|| SymError::UnknownBasis(s.to_string()))
    }
}

/// A finite linear combination of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    pub basis: Basis,
    coeffs: BTreeMap<Partition, QTRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, coeffs: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, l: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(l, QTRational::one());
        SymFunc { basis, coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, QTRational)>>(basis: Basis, it: I) -> Self {
        let mut f = Self::zero(basis);
        for (l, c) in it {
            f.add_term(l, &c);
        }
        f
    }

    pub fn add_term(&mut self, l: Partition, c: &QTRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(l) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, l: &Partition) -> QTRational {
        self.coeffs.get(l).cloned().unwrap_or_else(QTRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QTRational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    pub fn scale(&self, c: &QTRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc { basis: self.basis, coeffs: self.coeffs.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    /// Sum, expressed in `self`'s basis.
    pub fn add(&self, o: &SymFunc) -> Result<SymFunc, SymError> {
        let o = o.in_basis(self.basis)?;
        let mut r = self.clone();
        for (l, c) in o.coeffs {
            r.add_term(l, &c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &SymFunc) -> Result<SymFunc, SymError> {
        self.add(&o.scale(&QTRational::from_int(-1)))
    }

    fn by_degree(&self) -> BTreeMap<usize, Vec<(&Partition, &QTRational)>> {
        let mut m: BTreeMap<usize, Vec<_>> = BTreeMap::new();
        for (l, c) in &self.coeffs {
            m.entry(l.size()).or_default().push((l, c));
        }
        m
    }

    /// Monomial coordinates of the degree-`d` part.
    fn monomial_coords(&self, d: usize, terms: &[(&Partition, &QTRational)]) -> Result<Vec<QTRational>, SymError> {
        let ct = classical_table(d);
        let dim = ct.dim();
        let mut v = vec![QTRational::zero(); dim];
        let mut put = |i: usize, c: &QTRational, row: &dyn Fn(usize) -> Option<QTRational>| {
            let _ = i;
            for r in 0..dim {
                if let Some(x) = row(r) {
                    if !x.is_zero() {
                        v[r] = &v[r] + &(&x * c);
                    }
                }
            }
        };
        for &(l, c) in terms {
            let i = ct.index[l];
            match self.basis {
                Basis::Monomial => put(i, c, &|r| (r == i).then(QTRational::one)),
                Basis::PowerSum => put(i, c, &|r| Some(QTRational::from_rational(ct.p_in_m[i][r].clone()))),
                Basis::Elementary => put(i, c, &|r| Some(QTRational::from_rational(ct.e_in_m[i][r].clone()))),
                Basis::Homogeneous => put(i, c, &|r| Some(QTRational::from_rational(ct.h_in_m[i][r].clone()))),
                Basis::Schur => put(i, c, &|r| Some(QTRational::from_rational(ct.s_in_m[i][r].clone()))),
                Basis::MacP | Basis::MacM => {
                    let mt = macdonald_table(d)?;
                    let c = if self.basis == Basis::MacM { c / &mt.m_const[i] } else { c.clone() };
                    put(i, &c, &|r| Some(mt.p_in_m[i][r].clone()));
                }
            }
        }
        Ok(v)
    }

    fn from_monomial_coords(target: Basis, d: usize, v: Vec<QTRational>) -> Result<Vec<QTRational>, SymError> {
        let ct = classical_table(d);
        let dim = ct.dim();
        let via = |mat: &Mat| -> Vec<QTRational> {
            (0..dim)
                .map(|c| {
                    let mut acc = QTRational::zero();
                    for r in 0..dim {
                        if !v[r].is_zero() && !mat[r][c].is_zero() {
                            acc += &v[r].scale(&mat[r][c]);
                        }
                    }
                    acc
                })
                .collect()
        };
        Ok(match target {
            Basis::Monomial => v,
            Basis::PowerSum => via(&ct.m_in_p),
            Basis::Elementary => via(&ct.m_in_e),
            Basis::Homogeneous => via(&ct.m_in_h),
            Basis::Schur => via(&ct.m_in_s),
            Basis::MacP | Basis::MacM => {
                let mt = macdonald_table(d)?;
                let mut a = mt.m_to_p_coords(v);
                if target == Basis::MacM {
                    for (i, x) in a.iter_mut().enumerate() {
                        if !x.is_zero() {
                            *x = &*x * &mt.m_const[i];
                        }
                    }
                }
                a
            }
        })
    }

    /// Exact change of basis.
    pub fn in_basis(&self, target: Basis) -> Result<SymFunc, SymError> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = SymFunc::zero(target);
        for (d, terms) in self.by_degree() {
            check_bound(d)?;
            // P and M differ by a diagonal rescaling.
            if matches!((self.basis, target), (Basis::MacP, Basis::MacM) | (Basis::MacM, Basis::MacP)) {
                let mt = macdonald_table(d)?;
                let ct = classical_table(d);
                for (l, c) in terms {
                    let k = &mt.m_const[ct.index[l]];
                    out.add_term(l.clone(), &if target == Basis::MacM { c * k } else { c / k });
                }
                continue;
            }
            let v = self.monomial_coords(d, &terms)?;
            let w = Self::from_monomial_coords(target, d, v)?;
            let ct = classical_table(d);
            for (i, c) in w.into_iter().enumerate() {
                out.add_term(ct.parts[i].clone(), &c);
            }
        }
        Ok(out)
    }

    /// Partition-string to coefficient-string map.
    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        m.insert("basis".into(), Value::String(self.basis.symbol().into()));
        let terms: serde_json::Map<String, Value> =
            self.coeffs.iter().map(|(l, c)| (l.to_string(), Value::String(c.to_string()))).collect();
        m.insert("terms".into(), Value::Object(terms));
        Value::Object(m)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}{}", self.basis, l)?;
            } else {
                write!(f, "({}){}{}", c, self.basis, l)?;
            }
        }
        Ok(())
    }
}

fn power_sum_pairing(f: &SymFunc, g: &SymFunc, weighted: bool) -> Result<QTRational, SymError> {
    let f = f.in_basis(Basis::PowerSum)?;
    let g = g.in_basis(Basis::PowerSum)?;
    let mut acc = QTRational::zero();
    for (l, a) in f.terms() {
        let b = g.coeff(l);
        if b.is_zero() {
            continue;
        }
        let mut w = (a * &b).scale(&z_lambda(l));
        if weighted {
            w = &w * &mac_weight(l);
        }
        acc += &w;
    }
    Ok(acc)
}

/// Hall inner product, `⟨p_λ, p_μ⟩ = δ z_λ`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<QTRational, SymError> {
    power_sum_pairing(f, g, false)
}

/// Macdonald inner product, `⟨p_k, p_k⟩ = k (1 - q^k) / (1 - t^k)`.
pub fn macdonald_inner(f: &SymFunc, g: &SymFunc) -> Result<QTRational, SymError> {
    power_sum_pairing(f, g, true)
}

/// `P_λ` in the monomial basis.
#[allow(non_snake_case)]
pub fn macdonald_P(l: &Partition) -> Result<SymFunc, SymError> {
    SymFunc::basis_element(Basis::MacP, l.clone()).in_basis(Basis::Monomial)
}

/// `M_λ` in the monomial basis.
#[allow(non_snake_case)]
pub fn macdonald_M(l: &Partition) -> Result<SymFunc, SymError> {
    SymFunc::basis_element(Basis::MacM, l.clone()).in_basis(Basis::Monomial)
}

pub fn schur(l: &Partition) -> Result<SymFunc, SymError> {
    SymFunc::basis_element(Basis::Schur, l.clone()).in_basis(Basis::Monomial)
}

pub fn convert(f: &SymFunc, target: Basis) -> Result<SymFunc, SymError> {
    f.in_basis(target)
}

/// `∇^r`, diagonal on `M_λ` with eigenvalue `(∏_{□∈λ} χ_□)^r`; the result is in the M basis.
pub fn nabla(f: &SymFunc, r: i64) -> Result<SymFunc, SymError> {
    let g = f.in_basis(Basis::MacM)?;
    Ok(SymFunc::from_terms(
        Basis::MacM,
        g.terms().map(|(l, c)| (l.clone(), c.mul_monomial(nabla_eigenvalue(l).pow(r)))),
    ))
}

pub fn nabla_eigenvalue(l: &Partition) -> QTMonomial {
    l.weight()
}

/// `φ`: the ring map with `φ(p_k) = 1`.
pub fn norm_phi(f: &SymFunc) -> Result<QTRational, SymError> {
    let g = f.in_basis(Basis::PowerSum)?;
    Ok(g.terms().fold(QTRational::zero(), |a, (_, c)| &a + c))
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    let mut v: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(v).unwrap()
}

/// Product, expressed in `f`'s basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc, SymError> {
    if let (Some(a), Some(b)) = (f.max_degree(), g.max_degree()) {
        check_bound(a + b)?;
    }
    let fp = f.in_basis(Basis::PowerSum)?;
    let gp = g.in_basis(Basis::PowerSum)?;
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (a, x) in fp.terms() {
        for (b, y) in gp.terms() {
            out.add_term(merge(a, b), &(x * y));
        }
    }
    out.in_basis(f.basis)
}

/// The Macdonald adjoint of multiplication by a fixed function.
#[derive(Clone, Debug)]
pub struct AdjointMult {
    f: SymFunc,
}

/// `A†` with `⟨f·h, g⟩_{q,t} = ⟨h, A† g⟩_{q,t}`; computed in power sums, where the Gram matrix is diagonal.
pub fn adjoint_mult(f: &SymFunc) -> Result<AdjointMult, SymError> {
    Ok(AdjointMult { f: f.in_basis(Basis::PowerSum)? })
}

/// `σ \ ρ` as multisets, if `ρ ⊆ σ`.
fn multiset_minus(sigma: &Partition, rho: &Partition) -> Option<Partition> {
    let mut rest = sigma.parts().to_vec();
    for p in rho.parts() {
        let i = rest.iter().position(|x| x == p)?;
        rest.remove(i);
    }
    Partition::new(rest).ok()
}

fn gram_p(l: &Partition) -> QTRational {
    mac_weight(l).scale(&z_lambda(l))
}

impl AdjointMult {
    pub fn apply(&self, g: &SymFunc) -> Result<SymFunc, SymError> {
        let gp = g.in_basis(Basis::PowerSum)?;
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (sigma, c) in gp.terms() {
            let ns = gram_p(sigma);
            for (rho, a) in self.f.terms() {
                if let Some(tau) = multiset_minus(sigma, rho) {
                    let k = &(&ns / &gram_p(&tau)) * &(a * c);
                    out.add_term(tau, &k);
                }
            }
        }
        out.in_basis(g.basis)
    }
}

/// Hall-weight `z_λ` as a rational, re-exported for operator code.
pub fn z(l: &Partition) -> Rational {
    z_lambda(l)
}
