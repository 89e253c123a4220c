//! Greatest common divisors of bivariate Laurent polynomials.
//!
//! Inputs are shifted to ordinary polynomials, compressed along the exponent
//! lattice they actually use, cleared to integer coefficients and handed to a
//! primitive pseudo-remainder sequence in one variable over `Z[other]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QTMonomial, QTPolynomial, Rational};

type UPoly = Vec<BigInt>;
type BPoly = Vec<UPoly>;

fn trim(v: &mut UPoly) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn trim_b(v: &mut BPoly) {
    while v.last().map(|c| c.is_empty()).unwrap_or(false) {
        v.pop();
    }
}

fn ucontent(v: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn uscale_div(v: &UPoly, c: &BigInt) -> UPoly {
    v.iter().map(|x| x / c).collect()
}

fn uprimitive(v: &UPoly) -> UPoly {
    if v.is_empty() {
        return vec![];
    }
    let mut g = ucontent(v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    uscale_div(v, &g)
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        r.push(x - y);
    }
    trim(&mut r);
    r
}

/// Pseudo-remainder of `a` by `b` (both nonzero, univariate).
fn uprem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &lr * y;
        }
        trim(&mut r);
        let g = ucontent(&r);
        if !g.is_zero() && !g.is_one() {
            r = uscale_div(&r, &g);
        }
    }
    r
}

/// Exact division over `Z`; `None` if not exact.
fn udivexact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() {
        return Some(vec![]);
    }
    if b.len() > a.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &qc * y;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    if !r.is_empty() {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Gcd in `Z[x]`, content included, positive leading coefficient.
fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return uprimitive_keep_content(b);
    }
    if b.is_empty() {
        return uprimitive_keep_content(a);
    }
    let c = ucontent(a).gcd(&ucontent(b));
    let mut x = uprimitive(a);
    let mut y = uprimitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        if y.len() == 1 {
            return vec![c];
        }
        let r = uprem(&x, &y);
        if r.is_empty() {
            break;
        }
        x = y;
        y = uprimitive(&r);
    }
    y.iter().map(|v| v * &c).collect()
}

fn uprimitive_keep_content(v: &UPoly) -> UPoly {
    if v.last().map(|c| c.is_negative()).unwrap_or(false) {
        v.iter().map(|c| -c).collect()
    } else {
        v.clone()
    }
}

fn bcontent(a: &BPoly) -> UPoly {
    let mut g: UPoly = vec![];
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = ugcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bdiv_u(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter().map(|x| if x.is_empty() { vec![] } else { udivexact(x, c).expect("content divides") }).collect()
}

fn bprimitive(a: &BPoly) -> BPoly {
    let c = bcontent(a);
    let mut r = if c.len() == 1 && c[0].is_one() { a.clone() } else { bdiv_u(a, &c) };
    let lc = r.last().unwrap();
    if lc.last().unwrap().is_negative() {
        for x in r.iter_mut() {
            for v in x.iter_mut() {
                *v = -&*v;
            }
        }
    }
    r
}

/// Pseudo-remainder in `Z[x][y]`, kept primitive along the way.
fn bprem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = umul(c, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            let prod = umul(&lr, y);
            r[j + shift] = usub(&r[j + shift], &prod);
        }
        trim_b(&mut r);
        if !r.is_empty() {
            let g = bcontent(&r);
            if !(g.len() == 1 && g[0].is_one()) {
                r = bdiv_u(&r, &g);
            }
        }
    }
    r
}

fn umaxnorm(v: &UPoly) -> BigInt {
    v.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn ueval(v: &UPoly, x: &BigInt) -> BigInt {
    v.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Digits of `h` in base `xi`, each in `(-xi/2, xi/2]`.
fn balanced_digits(mut h: BigInt, xi: &BigInt) -> UPoly {
    let half = xi / 2;
    let mut out = vec![];
    while !h.is_zero() {
        let mut d = h.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        h = (h - &d) / xi;
        out.push(d);
    }
    out
}

fn next_point(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

const HEU_TRIES: usize = 6;

/// Heuristic gcd in `Z[x]`: evaluate at a large integer, take the integer gcd
/// and read the candidate back from balanced digits. A candidate is only
/// accepted when it divides both inputs.
fn ugcd_heu(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() || b.is_empty() {
        return Some(ugcd(a, b));
    }
    let c = ucontent(a).gcd(&ucontent(b));
    let a = uprimitive(a);
    let b = uprimitive(b);
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![c]);
    }
    let mut xi = BigInt::from(2) * umaxnorm(&a).min(umaxnorm(&b)) + BigInt::from(29);
    for _ in 0..HEU_TRIES {
        let h = ueval(&a, &xi).gcd(&ueval(&b, &xi));
        let g = balanced_digits(h, &xi);
        if !g.is_empty() {
            let g = uprimitive(&g);
            if udivexact(&a, &g).is_some() && udivexact(&b, &g).is_some() {
                return Some(g.iter().map(|v| v * &c).collect());
            }
        }
        xi = next_point(&xi);
    }
    None
}

fn bmaxnorm(a: &BPoly) -> BigInt {
    a.iter().map(umaxnorm).max().unwrap_or_default()
}

/// Exact division in `Z[y][x]`; `None` if not exact.
fn bdivexact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    if a.is_empty() {
        return Some(vec![]);
    }
    if b.len() > a.len() {
        return None;
    }
    let db = b.len() - 1;
    let mut r = a.clone();
    let mut q = vec![vec![]; a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let qc = udivexact(&r[dr], &b[db])?;
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[j + shift] = usub(&r[j + shift], &umul(&qc, y));
        }
        q[shift] = qc;
        trim_b(&mut r);
    }
    if !r.is_empty() {
        return None;
    }
    Some(q)
}

/// Heuristic gcd in `Z[y][x]`: substitute a large integer for `y`, recurse
/// into `Z[x]` and lift the coefficients back by balanced digits.
fn bgcd_heu(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    let mut xi = BigInt::from(2) * bmaxnorm(a).min(bmaxnorm(b)) + BigInt::from(29);
    for _ in 0..HEU_TRIES {
        let ea: UPoly = a.iter().map(|c| ueval(c, &xi)).collect();
        let eb: UPoly = b.iter().map(|c| ueval(c, &xi)).collect();
        if ea.last().map(|c| !c.is_zero()).unwrap_or(false) && eb.last().map(|c| !c.is_zero()).unwrap_or(false) {
            if let Some(h) = ugcd_heu(&ea, &eb) {
                let mut g: BPoly = h.into_iter().map(|c| balanced_digits(c, &xi)).collect();
                trim_b(&mut g);
                if !g.is_empty() {
                    let ic = g.iter().flatten().fold(BigInt::zero(), |acc, c| acc.gcd(c));
                    let mut g: BPoly = g.iter().map(|row| row.iter().map(|v| v / &ic).collect()).collect();
                    if g.last().unwrap().last().unwrap().is_negative() {
                        for row in g.iter_mut() {
                            for v in row.iter_mut() {
                                *v = -&*v;
                            }
                        }
                    }
                    if bdivexact(a, &g).is_some() && bdivexact(b, &g).is_some() {
                        let ca = a.iter().flatten().fold(BigInt::zero(), |acc, c| acc.gcd(c));
                        let cb = b.iter().flatten().fold(BigInt::zero(), |acc, c| acc.gcd(c));
                        let c = ca.gcd(&cb);
                        return Some(g.iter().map(|row| row.iter().map(|v| v * &c).collect()).collect());
                    }
                }
            }
        }
        xi = next_point(&xi);
    }
    None
}

fn bgcd(a: &BPoly, b: &BPoly) -> BPoly {
    let ca = bcontent(a);
    let cb = bcontent(b);
    let c = ugcd(&ca, &cb);
    let mut x = bdiv_u(a, &ca);
    let mut y = bdiv_u(b, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if y.len() == 1 {
            break vec![vec![BigInt::one()]];
        }
        let r = bprem(&x, &y);
        if r.is_empty() {
            break bprimitive(&y);
        }
        x = y;
        y = bprimitive(&r);
    };
    g.iter().map(|row| umul(row, &c)).collect()
}

/// Gcd of two Laurent polynomials up to units (constants and monomials).
///
/// The result has integer coefficients, no monomial content and positive
/// leading coefficient.
pub fn gcd(a: &QTPolynomial, b: &QTPolynomial) -> QTPolynomial {
    if a.is_zero() {
        return strip_monomial(&b.primitive_integer());
    }
    if b.is_zero() {
        return strip_monomial(&a.primitive_integer());
    }
    if a.len() == 1 || b.len() == 1 {
        return QTPolynomial::one();
    }
    let (alo, _) = a.exponent_box().unwrap();
    let (blo, _) = b.exponent_box().unwrap();
    let mut gq = 0i64;
    let mut gt = 0i64;
    for (m, _) in a.terms() {
        gq = gq.gcd(&(m.qexp2 - alo.qexp2));
        gt = gt.gcd(&(m.texp2 - alo.texp2));
    }
    for (m, _) in b.terms() {
        gq = gq.gcd(&(m.qexp2 - blo.qexp2));
        gt = gt.gcd(&(m.texp2 - blo.texp2));
    }
    let gq = if gq == 0 { 1 } else { gq };
    let gt = if gt == 0 { 1 } else { gt };
    let (ea, eb) = (to_grid(a, alo, gq, gt), to_grid(b, blo, gq, gt));
    // Main variable: the one of smaller degree.
    let degq = ea.iter().map(|t| t.0).max().unwrap().max(eb.iter().map(|t| t.0).max().unwrap());
    let degt = ea.iter().map(|t| t.1).max().unwrap().max(eb.iter().map(|t| t.1).max().unwrap());
    let q_main = degq <= degt;
    let (pa, pb) = (to_bpoly(&ea, q_main), to_bpoly(&eb, q_main));
    let g = bgcd_heu(&pa, &pb).unwrap_or_else(|| bgcd(&pa, &pb));
    let mut out = QTPolynomial::zero();
    for (i, row) in g.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (eq, et) = if q_main { (i as i64, j as i64) } else { (j as i64, i as i64) };
            out.add_term(QTMonomial::from_doubled(eq * gq, et * gt), Rational::from_integer(c.clone()));
        }
    }
    strip_monomial(&out.primitive_integer())
}

fn strip_monomial(p: &QTPolynomial) -> QTPolynomial {
    match p.exponent_box() {
        Some((lo, _)) if !lo.is_one() => p.mul_monomial(lo.inv()),
        _ => p.clone(),
    }
}

fn to_grid(p: &QTPolynomial, lo: QTMonomial, gq: i64, gt: i64) -> Vec<(usize, usize, BigInt)> {
    let (l, _) = p.integer_content();
    p.terms()
        .map(|(m, c)| {
            let v = c * Rational::from_integer(l.clone());
            (((m.qexp2 - lo.qexp2) / gq) as usize, ((m.texp2 - lo.texp2) / gt) as usize, v.to_integer())
        })
        .collect()
}

fn to_bpoly(e: &[(usize, usize, BigInt)], q_main: bool) -> BPoly {
    let mut out: BPoly = vec![];
    for (i, j, c) in e {
        let (mi, oi) = if q_main { (*i, *j) } else { (*j, *i) };
        if out.len() <= mi {
            out.resize(mi + 1, vec![]);
        }
        let row = &mut out[mi];
        if row.len() <= oi {
            row.resize(oi + 1, BigInt::zero());
        }
        row[oi] += c;
    }
    for row in out.iter_mut() {
        trim(row);
    }
    trim_b(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> QTPolynomial {
        QTPolynomial::from_terms(
            terms.iter().map(|&(a, b, c)| (QTMonomial::new(a, b), Rational::from_integer(BigInt::from(c)))),
        )
    }

    #[test]
    fn univariate_common_factor() {
        let a = p(&[(0, 0, 1), (2, 0, -1)]); // 1 - q^2
        let b = p(&[(0, 0, 1), (1, 0, -1)]); // 1 - q
        assert_eq!(gcd(&a, &b), p(&[(1, 0, 1), (0, 0, -1)]));
    }

    #[test]
    fn bivariate_common_factor() {
        let f = p(&[(1, 0, 1), (0, 1, -1)]); // q - t
        let g1 = p(&[(0, 0, 1), (1, 1, 3)]);
        let g2 = p(&[(2, 0, 1), (0, 0, 5), (0, 3, 1)]);
        let a = &f * &g1;
        let b = &f * &g2;
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn laurent_shift_and_units() {
        let f = p(&[(1, 0, 1), (0, 1, -1)]);
        let a = (&f * &p(&[(1, 0, 1), (0, 0, 1)])).mul_monomial(QTMonomial::new(-3, 2));
        let b = f.scale(&Rational::new(BigInt::from(-2), BigInt::from(7)));
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn coprime() {
        let a = p(&[(1, 0, 1), (0, 1, -1)]);
        let b = p(&[(1, 0, 1), (0, 1, 1)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn half_exponents() {
        // 1 - q = (1 - q^{1/2})(1 + q^{1/2})
        let a = QTPolynomial::from_terms([(QTMonomial::ONE, Rational::one()), (QTMonomial::q(1), -Rational::one())]);
        let b = QTPolynomial::from_terms([
            (QTMonomial::ONE, Rational::one()),
            (QTMonomial::from_doubled(1, 0), Rational::one()),
        ]);
        assert_eq!(gcd(&a, &b), b);
    }

    fn bpoly_of(terms: &[(i64, i64, i64)]) -> BPoly {
        let e: Vec<(usize, usize, BigInt)> =
            terms.iter().map(|&(a, b, c)| (a as usize, b as usize, BigInt::from(c))).collect();
        to_bpoly(&e, true)
    }

    fn normalize(g: BPoly) -> BPoly {
        let ic = g.iter().flatten().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if g.last().unwrap().last().unwrap().is_negative() { -ic } else { ic };
        g.iter().map(|r| r.iter().map(|v| v / &sign).collect()).collect()
    }

    proptest::proptest! {
        #[test]
        fn heuristic_agrees_with_prs(
            f in proptest::collection::vec((0i64..4, 0i64..4, -3i64..4), 1..5),
            g in proptest::collection::vec((0i64..4, 0i64..4, -3i64..4), 1..5),
            h in proptest::collection::vec((0i64..4, 0i64..4, -3i64..4), 1..5),
        ) {
            let (f, g, h) = (p(&f), p(&g), p(&h));
            proptest::prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
            let a = &f * &g;
            let b = &f * &h;
            let grid = |x: &QTPolynomial| -> Vec<(i64, i64, i64)> {
                x.terms().map(|(m, c)| (m.qexp2 / 2, m.texp2 / 2, c.to_integer().try_into().unwrap())).collect()
            };
            let (pa, pb) = (bpoly_of(&grid(&a)), bpoly_of(&grid(&b)));
            if let Some(fast) = bgcd_heu(&pa, &pb) {
                proptest::prop_assert_eq!(normalize(fast), normalize(bgcd(&pa, &pb)));
            }
        }
    }
}
