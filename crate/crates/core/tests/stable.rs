use std::collections::BTreeMap;

use mnpieri::hall::negative_e_action;
use mnpieri::qt::{deg_se, QTMonomial, QTRational};
use mnpieri::shapes::{enumerate_partitions, partitions_up_to, Partition, SkewShape};
use mnpieri::stable::*;
use mnpieri::sym::{convert, m_normalizer, multiply, nabla, nabla_eigenvalue, schur, Basis, SymFunc};
use proptest::prelude::*;

fn p(parts: &[usize]) -> Partition {
    Partition::of(parts)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

#[test]
fn integer_slope_examples() {
    for l in partitions_up_to(4) {
        assert_eq!(stable_integer_slope(&l, 0).unwrap(), schur(&l).unwrap().in_basis(Basis::MacM).unwrap());
    }
    let s1 = schur(&p(&[1])).unwrap().in_basis(Basis::MacM).unwrap();
    for r in -2..=2 {
        assert_eq!(stable_integer_slope(&p(&[1]), r).unwrap(), s1);
    }
    // ∇ s_(2) / q, with ∇ M_λ = ∏χ · M_λ applied by hand.
    let s2 = convert(&schur(&p(&[2])).unwrap(), Basis::MacM).unwrap();
    let by_hand = SymFunc::from_terms(
        Basis::MacM,
        s2.terms().map(|(l, c)| (l.clone(), c.mul_monomial(nabla_eigenvalue(l)).mul_monomial(QTMonomial::q(-1)))),
    );
    assert_eq!(stable_integer_slope(&p(&[2]), 1).unwrap(), by_hand);
}

#[test]
fn integer_slope_bases_satisfy_the_defining_conditions() {
    for r in [-1, 0, 1, 2] {
        let e = StableExpansion::integer_slope(r, 5).unwrap();
        let rep = validate_stable(&e);
        assert!(rep.passed(), "r = {r}: {:?}", rep.failures().collect::<Vec<_>>());
        assert!(rep.checks.len() > 30);
    }
}

#[test]
fn multiplying_a_coefficient_by_q2_breaks_the_strip() {
    let mut e = StableExpansion::integer_slope(1, 3).unwrap();
    let c = e.entries.get_mut(&p(&[2, 1])).unwrap().get_mut(&p(&[1, 1, 1])).unwrap();
    *c = c.mul_monomial(QTMonomial::q(2));
    let rep = validate_stable(&e);
    let bad: Vec<_> = rep.failures().collect();
    assert_eq!(bad.len(), 1);
    assert!(!bad[0].upper_bound && bad[0].triangular && bad[0].normalized);
}

#[test]
fn validator_flags_each_condition() {
    let mut e = StableExpansion { m: 1, n: 2, entries: BTreeMap::new() };
    let mut row = BTreeMap::new();
    row.insert(p(&[2]), m_normalizer(&p(&[2])));
    // (3) does not lie below (2) in dominance, and 1/2 is not integral.
    row.insert(p(&[3]), QTRational::from_int(1));
    row.insert(p(&[1, 1]), QTRational::one().checked_div(&QTRational::from_int(2)).unwrap());
    e.entries.insert(p(&[2]), row);
    e.entries.insert(p(&[1]), BTreeMap::from([(p(&[1]), QTRational::from_int(3))]));
    let rep = validate_stable(&e);
    let find = |l: &[usize], mu: &[usize]| rep.checks.iter().find(|c| c.lambda == l && c.mu == mu).unwrap().clone();
    assert!(!find(&[2], &[3]).triangular);
    assert!(!find(&[2], &[1, 1]).integral);
    assert!(find(&[2], &[2]).passed());
    assert!(!find(&[1], &[1]).normalized);
}

#[test]
fn macdonald_basis_is_the_slope_infinity_case() {
    let mut e = StableExpansion { m: 1, n: 0, entries: BTreeMap::new() };
    for l in partitions_up_to(4) {
        e.entries.insert(l.clone(), BTreeMap::from([(l.clone(), m_normalizer(&l))]));
    }
    assert!(validate_stable(&e).passed());
    e.entries.get_mut(&p(&[2])).unwrap().insert(p(&[1, 1]), QTRational::one());
    assert_eq!(validate_stable(&e).failures().count(), 1);
}

#[test]
fn expansion_json_round_trip() {
    let e = StableExpansion::integer_slope(-1, 3).unwrap();
    let back = StableExpansion::from_json(&e.to_json()).unwrap();
    assert_eq!(back, e);
    assert!(StableExpansion::from_json("{\"schema\":1}").is_err());
}

#[test]
fn classical_pieri_rule() {
    for k in 1..=2 {
        let ek = SymFunc::basis_element(Basis::Elementary, p(&[k]));
        for mu in partitions_up_to(4) {
            let prod = multiply(&ek, &SymFunc::basis_element(Basis::Schur, mu.clone()))
                .unwrap()
                .in_basis(Basis::Schur)
                .unwrap();
            let lhs: BTreeMap<Partition, QTRational> =
                prod.terms().filter(|(_, c)| !c.is_zero()).map(|(l, c)| (l.clone(), c.clone())).collect();
            let rhs = pieri_rhs(&mu, k, 0, 1).unwrap();
            assert!(rhs.values().all(QTRational::is_one));
            assert_eq!(lhs, rhs, "e_{k} s_{mu:?}");
        }
    }
}

#[test]
fn integer_slope_coefficients_are_box_weights() {
    // n = 1: every ribbon is a box and contributes χ^m.
    let r = pieri_rhs(&p(&[1]), 1, 3, 1).unwrap();
    assert_eq!(r[&p(&[2])], QTRational::monomial(QTMonomial::q(3)));
    assert_eq!(r[&p(&[1, 1])], QTRational::monomial(QTMonomial::t(-3)));
    assert!(matches!(pieri_rhs(&p(&[]), 1, 2, 4), Err(StableError::NotCoprime { .. })));
}

/// The vertical-strip rule on hooks: `(-1)^{n-i} q^{Σ_{j<i} ⌈mj/n⌉} t^{-Σ_{j≤n-i} ⌊mj/n⌋}`.
#[test]
fn hook_coefficients() {
    for n in 1..=4i64 {
        for m in -5..=5i64 {
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            let r = pieri_rhs(&Partition::empty(), 1, m, n as usize).unwrap();
            assert_eq!(r.len(), n as usize);
            for i in 1..=n {
                let mut parts = vec![i as usize];
                parts.extend(std::iter::repeat_n(1, (n - i) as usize));
                let qe: i64 = (1..i).map(|j| ceil_div(m * j, n)).sum();
                let te: i64 = (1..=n - i).map(|j| (m * j).div_euclid(n)).sum();
                let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
                assert_eq!(r[&p(&parts)], QTRational::term(sign, QTMonomial::new(qe, -te)), "m={m} n={n} i={i}");
            }
        }
    }
}

#[test]
fn negative_rhs_examples() {
    // n = 1: prefactor (-1)^k, boxes contribute χ^{-m}.
    let r = pieri_rhs_negative(&p(&[2, 1]), 1, 1, 1).unwrap();
    assert_eq!(r[&p(&[1, 1])], QTRational::term(-1, QTMonomial::q(-1)));
    assert_eq!(r[&p(&[2])], QTRational::term(-1, QTMonomial::t(1)));
    assert_eq!(r.len(), 2);
    // Horizontal domino under (2): (-1)^2 (-1)^{width} (qt)^{-1/2}.
    let r = pieri_rhs_negative(&p(&[2]), 1, 1, 2).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[&Partition::empty()], QTRational::term(-1, QTMonomial { qexp2: -1, texp2: -1 }));
}

#[test]
fn negative_generators_match_the_negative_rule_up_to_t_over_q() {
    for m in [0, 1] {
        for k in 1..=2usize {
            let factor = QTRational::monomial(QTMonomial::new(-1, 1).pow(k as i64));
            for l in partitions_up_to(4) {
                let g = negative_e_action(k, m, 1, &stable_integer_slope(&l, m).unwrap()).unwrap();
                let back = nabla(&g, -m).unwrap().in_basis(Basis::Schur).unwrap();
                let lhs: BTreeMap<Partition, QTRational> = back
                    .terms()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(mu, c)| (mu.clone(), c.mul_monomial(nabla_eigenvalue(mu).pow(m))))
                    .collect();
                let rhs: BTreeMap<Partition, QTRational> =
                    pieri_rhs_negative(&l, k, m, 1).unwrap().into_iter().map(|(mu, c)| (mu, &c * &factor)).collect();
                assert_eq!(lhs, rhs, "m={m} k={k} λ={l:?}");
            }
        }
    }
}

#[test]
fn integer_slope_pieri_rule_both_routes() {
    for m in [-1, 1, 2] {
        for k in 1..=2 {
            for mu in partitions_up_to(4) {
                assert!(verify_pieri_integer_slope(&mu, k, m).unwrap(), "kernel m={m} k={k} {mu:?}");
                assert!(verify_pieri_integer_slope_via(&mu, k, m, Route::Nabla).unwrap(), "nabla m={m} k={k} {mu:?}");
            }
        }
    }
    // μ = ∅ is e_k^{m/1} · 1.
    let lhs = integer_slope_pieri_lhs(&Partition::empty(), 2, 1, Route::Kernel).unwrap();
    assert_eq!(lhs.len(), 1);
    assert_eq!(lhs[&p(&[1, 1])], QTRational::monomial(QTMonomial::t(-1)));
}

#[test]
fn flat_statistic() {
    let sk = |o: &[usize], i: &[usize]| SkewShape::new(p(o), p(i)).unwrap();
    assert_eq!(flat_count(&sk(&[1], &[])), 1);
    assert_eq!(flat_count(&sk(&[3, 3], &[])), 4);
    assert_eq!(flat_count(&sk(&[3, 1], &[2])), 2);
}

#[test]
fn degree_scan_small_range() {
    let r = degree_scan(1, 2, 1, 6).unwrap();
    assert!(r.passed());
    let find = |o: &[usize]| r.shapes.iter().find(|s| s.outer == o && s.inner.is_empty()).unwrap();
    for o in [&[1, 1][..], &[2][..]] {
        let s = find(o);
        assert!(s.coverable && s.equality && s.hd_matches == Some(true));
    }
    // (3,1)/(1,1) is not a domino strip: strict inequality.
    let s = r.shapes.iter().find(|s| s.outer == [2, 2] && s.inner == [1, 1]).unwrap();
    assert!(s.coverable);
    assert!(r.shapes.iter().any(|s| !s.coverable && !s.vanishes && s.upper_ok && !s.equality));
    // Scan order: |λ|, then reverse lexicographic.
    let sizes: Vec<usize> = r.shapes.iter().map(|s| s.outer.iter().sum()).collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn leading_terms_at_k2_carry_an_adjacency_sign() {
    let r = degree_scan(1, 2, 2, 6).unwrap();
    assert_eq!(r.bound_violations().count(), 0);
    assert_eq!(r.d_failures().count(), 0);
    assert_eq!(r.signed_hd_mismatches().count(), 0);
    let literal: Vec<_> = r.hd_mismatches().collect();
    assert!(!literal.is_empty());
    assert!(literal.iter().all(|s| s.adjacent_pairs.unwrap() % 2 == 1 && s.hd_ratio.as_deref() == Some("-1")));
}

#[test]
fn scan_rejects_non_coprime_slopes() {
    assert!(matches!(degree_scan(2, 4, 1, 4), Err(StableError::NotCoprime { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn pieri_coefficients_are_signed_monomials(mm in -3i64..=3, n in 1usize..=3, k in 1usize..=2, d in 0usize..=4, pick in 0usize..5) {
        prop_assume!(num_integer::gcd(mm, n as i64) == 1);
        let parts: Vec<Partition> = enumerate_partitions(d).collect();
        let mu = &parts[pick % parts.len()];
        for c in pieri_rhs(mu, k, mm, n).unwrap().values() {
            let (coef, _) = c.as_term().expect("monomial");
            prop_assert!(num_traits::Signed::abs(&coef) == num_traits::One::one());
        }
    }

    #[test]
    fn diagonal_entries_sit_on_the_upper_edge(r in -1i64..=2, d in 1usize..=4, pick in 0usize..5) {
        // c^λ_λ has deg_se exactly max_λ, the closed end of the strip.
        let parts: Vec<Partition> = enumerate_partitions(d).collect();
        let l = &parts[pick % parts.len()];
        let f = stable_integer_slope(l, r).unwrap();
        prop_assert_eq!(deg_se(&f.coeff(l)).unwrap().doubled(), 2 * l.max_stat());
    }
}
