//! Kernels at numeric points: exact rational `q`, `t`, `z_i`.

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ShuffleError, ShuffleKernel, Template, VarMono};
use crate::qt::{eval_qt, QTMonomial, Rational};

fn qt_value(m: QTMonomial, q: &Rational, t: &Rational) -> Rational {
    assert!(m.is_integral(), "half-integral monomial in a kernel template");
    q.pow((m.qexp2 / 2) as i32) * t.pow((m.texp2 / 2) as i32)
}

fn mono_value(v: &VarMono, z: &[Rational], q: &Rational, t: &Rational) -> Rational {
    let mut r = qt_value(v.qt, q, t);
    for &(i, e) in &v.vars {
        r *= z[i].pow(e as i32);
    }
    r
}

fn term_value(tpl: &Template, z: &[Rational], q: &Rational, t: &Rational) -> Result<Rational, ShuffleError> {
    let mut num = Rational::one();
    for m in &tpl.monos {
        num *= mono_value(m, z, q, t);
    }
    for (a, b) in &tpl.num {
        num *= mono_value(a, z, q, t) - mono_value(b, z, q, t);
        if num.is_zero() {
            return Ok(num);
        }
    }
    for s in &tpl.psums {
        num *= s.iter().map(|m| mono_value(m, z, q, t)).fold(Rational::zero(), |a, b| a + b);
    }
    let mut den = Rational::one();
    for (a, b) in &tpl.den {
        den *= mono_value(a, z, q, t) - mono_value(b, z, q, t);
    }
    if den.is_zero() {
        return Err(ShuffleError::Pole);
    }
    Ok(num / den)
}

fn sym_numeric(tpl: &Template, z: &[Rational], q: &Rational, t: &Rational) -> Result<Rational, ShuffleError> {
    let perms: Vec<Vec<usize>> = (0..tpl.n_vars).permutations(tpl.n_vars).collect();
    let sum = perms
        .par_iter()
        .map(|p| {
            let zs: Vec<Rational> = p.iter().map(|&i| z[i].clone()).collect();
            term_value(tpl, &zs, q, t)
        })
        .try_reduce(Rational::zero, |a, b| Ok(a + b))?;
    let c = eval_qt(&tpl.constant, q, t).map_err(|_| ShuffleError::Pole)?;
    Ok(sum * c)
}

/// The symmetrized kernel at numeric variables.
pub fn eval_numeric(
    kernel: &ShuffleKernel,
    z: &[Rational],
    q: &Rational,
    t: &Rational,
) -> Result<Rational, ShuffleError> {
    if z.len() != kernel.n_vars() {
        return Err(ShuffleError::CountMismatch { got: z.len(), want: kernel.n_vars() });
    }
    sym_numeric(&kernel.template(), z, q, t)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n: i64 = rng.random_range(-12..=12);
        let d: i64 = rng.random_range(1..=9);
        let r = Rational::new(n.into(), d.into());
        if !r.is_zero() && r != Rational::one() && r != -Rational::one() {
            return r;
        }
    }
}

/// Random `(q, t, z)` with small rational entries, `q, t ∉ {0, ±1}`, `q != t`
/// and pairwise distinct `z_i`.
pub fn random_point(rng: &mut ChaCha8Rng, n_vars: usize) -> (Rational, Rational, Vec<Rational>) {
    loop {
        let q = small_rational(rng);
        let t = small_rational(rng);
        if q == t || q == -&t || (&q * &t).is_one() {
            continue;
        }
        let z: Vec<Rational> = (0..n_vars).map(|_| small_rational(rng)).collect();
        if z.iter().all_unique() {
            return (q, t, z);
        }
    }
}

/// `P_k^{m/n}(z^{-1}) = P_k^{-m/n}(z)` at a numeric point.
pub fn invert_check_numeric(
    kernel: &ShuffleKernel,
    z: &[Rational],
    q: &Rational,
    t: &Rational,
) -> Result<bool, ShuffleError> {
    let inv: Vec<Rational> = z.iter().map(|x| x.recip()).collect();
    Ok(eval_numeric(kernel, &inv, q, t)? == eval_numeric(&kernel.negated_slope(), z, q, t)?)
}

/// Inversion identity at `trials` random numeric points; points where a
/// single term is singular are redrawn.
pub fn invert_check_trials(kernel: &ShuffleKernel, trials: usize, seed: u64) -> Result<bool, ShuffleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < trials {
        let (q, t, z) = random_point(&mut rng, kernel.n_vars());
        match invert_check_numeric(kernel, &z, &q, &t) {
            Ok(true) => done += 1,
            Ok(false) => return Ok(false),
            Err(ShuffleError::Pole) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// How a denominator binomial relates to the factors `t z_a - q z_b`.
enum DenKind {
    /// `a - b = mult · (t z_i - q z_j)`.
    Tq {
        i: usize,
        j: usize,
        mult: VarMono,
    },
    Other,
}

fn normalize(vars: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = vec![];
    for (v, e) in vars.into_iter().sorted() {
        match out.last_mut() {
            Some((w, f)) if *w == v => *f += e,
            _ => out.push((v, e)),
        }
    }
    out.retain(|(_, e)| *e != 0);
    out
}

fn quotient(a: &VarMono, b: &VarMono) -> VarMono {
    let mut vars = a.vars.clone();
    vars.extend(b.vars.iter().map(|&(v, e)| (v, -e)));
    VarMono { qt: a.qt / b.qt, vars: normalize(vars) }
}

/// Checks `a / b = (t/q) z_i / z_j`; then `a - b = b/(q z_j) · (t z_i - q z_j)`.
fn classify(a: &VarMono, b: &VarMono) -> DenKind {
    let r = quotient(a, b);
    if r.qt != QTMonomial::new(-1, 1) || r.vars.len() != 2 {
        return DenKind::Other;
    }
    let (i, j) = match (r.vars[0], r.vars[1]) {
        ((i, 1), (j, -1)) | ((j, -1), (i, 1)) => (i, j),
        _ => return DenKind::Other,
    };
    let mut vars = b.vars.clone();
    vars.push((j, -1));
    DenKind::Tq { i, j, mult: VarMono { qt: b.qt / QTMonomial::q(1), vars: normalize(vars) } }
}

/// `Σ_σ term_σ · ∏_{a≠b} (t z_a - q z_b)`, with the factors `t z_a - q z_b`
/// of each term's denominator cancelled symbolically before substitution.
fn cleared_numerator(tpl: &Template, z: &[Rational], q: &Rational, t: &Rational) -> Result<Rational, ShuffleError> {
    let n = tpl.n_vars;
    let kinds: Vec<(DenKind, bool)> = tpl
        .den
        .iter()
        .map(|(a, b)| match classify(a, b) {
            DenKind::Other => match classify(b, a) {
                k @ DenKind::Tq { .. } => (k, true),
                k => (k, false),
            },
            k => (k, false),
        })
        .collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    perms
        .par_iter()
        .map(|p| -> Result<Rational, ShuffleError> {
            let zs: Vec<Rational> = p.iter().map(|&i| z[i].clone()).collect();
            let mut num = Rational::one();
            for m in &tpl.monos {
                num *= mono_value(m, &zs, q, t);
            }
            for (a, b) in &tpl.num {
                num *= mono_value(a, &zs, q, t) - mono_value(b, &zs, q, t);
                if num.is_zero() {
                    return Ok(num);
                }
            }
            for s in &tpl.psums {
                num *= s.iter().map(|m| mono_value(m, &zs, q, t)).fold(Rational::zero(), |a, b| a + b);
            }
            let mut used = vec![vec![0u32; n]; n];
            let mut den = Rational::one();
            for ((a, b), (kind, flipped)) in tpl.den.iter().zip(&kinds) {
                match kind {
                    DenKind::Tq { i, j, mult } => {
                        used[p[*i]][p[*j]] += 1;
                        let mv = mono_value(mult, &zs, q, t);
                        den *= if *flipped { -mv } else { mv };
                    }
                    DenKind::Other => den *= mono_value(a, &zs, q, t) - mono_value(b, &zs, q, t),
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let f = t * &z[a] - q * &z[b];
                    match used[a][b] {
                        0 => num *= f,
                        1 => {}
                        _ => {
                            for _ in 1..used[a][b] {
                                den *= &f;
                            }
                        }
                    }
                }
            }
            if den.is_zero() {
                return Err(ShuffleError::Pole);
            }
            Ok(num / den)
        })
        .try_reduce(Rational::zero, |a, b| Ok(a + b))
}

/// Wheel conditions with `trials` random substitutions per pattern.
/// Returns `Ok(false)` as soon as a nonzero value of the cleared numerator is found.
pub fn wheel_check_trials(kernel: &ShuffleKernel, trials: usize, seed: u64) -> Result<bool, ShuffleError> {
    let n = kernel.n_vars();
    if n < 3 {
        return Ok(true);
    }
    let tpl = kernel.template();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for pattern in 0..2 {
        let mut done = 0;
        while done < trials {
            let (q, t, mut z) = random_point(&mut rng, n);
            let (a, b) = if pattern == 0 { (&q, &t) } else { (&t, &q) };
            z[0] = a * &z[1];
            z[2] = b * &z[1];
            if !z.iter().all_unique() {
                continue;
            }
            match cleared_numerator(&tpl, &z, &q, &t) {
                Ok(r) if r.is_zero() => done += 1,
                Ok(_) | Err(ShuffleError::Pole) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(true)
}

/// Wheel conditions with 20 trials per pattern and a fixed seed.
pub fn wheel_check(kernel: &ShuffleKernel) -> bool {
    wheel_check_trials(kernel, 20, 0x5eed).unwrap_or(false)
}
