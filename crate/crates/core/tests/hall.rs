use mnpieri::hall::*;
use mnpieri::qt::{one_minus, QTMonomial, QTRational};
use mnpieri::shapes::{enumerate_partitions, partitions_up_to, Partition};
use mnpieri::shuffle::ShuffleKernel;
use mnpieri::sym::{macdonald_inner, multiply, Basis, SymError, SymFunc};
use proptest::prelude::*;

fn m(parts: &[usize]) -> SymFunc {
    SymFunc::basis_element(Basis::MacM, Partition::of(parts))
}

fn power(k: usize) -> SymFunc {
    SymFunc::basis_element(Basis::PowerSum, Partition::of(&[k]))
}

fn same(a: &SymFunc, b: &SymFunc) -> bool {
    a.sub(b).unwrap().in_basis(Basis::MacM).unwrap().is_zero()
}

fn ops_agree(a: &HallOperator, b: &HallOperator, max: usize) {
    for l in partitions_up_to(max) {
        let f = SymFunc::basis_element(Basis::MacM, l.clone());
        assert!(same(&act(a, &f).unwrap(), &act(b, &f).unwrap()), "{a:?} vs {b:?} on M{l:?}");
    }
}

#[test]
fn constant_kernel_is_a_multiple_of_p1() {
    // R = 1 acts as (t - q)/(1 - q) times multiplication by p_1.
    let c = (&QTRational::t() - &QTRational::q()).checked_div(&one_minus(1, QTMonomial::q(1))).unwrap();
    let r = HallOperator::KernelAction(ShuffleKernel::z(0));
    for l in partitions_up_to(5) {
        let f = SymFunc::basis_element(Basis::MacM, l);
        let lhs = act(&r, &f).unwrap();
        let rhs = multiply(&f, &power(1)).unwrap().scale(&c);
        assert!(same(&lhs, &rhs));
    }
}

#[test]
fn slope_zero_generators_are_multiplication() {
    ops_agree(&HallOperator::p(1, 0, 1).unwrap(), &HallOperator::MultiplyBy(power(1)), 4);
    ops_agree(&HallOperator::p(2, 0, 1).unwrap(), &HallOperator::MultiplyBy(power(2)), 3);
    for k in 1..=2 {
        let ek = SymFunc::basis_element(Basis::Elementary, Partition::of(&[k]));
        ops_agree(&HallOperator::e(k, 0, 1).unwrap(), &HallOperator::MultiplyBy(ek), 3);
    }
}

#[test]
fn multiply_e1_on_one() {
    let e1 = SymFunc::basis_element(Basis::Elementary, Partition::of(&[1]));
    let r = act(&HallOperator::MultiplyBy(e1.clone()), &SymFunc::one(Basis::MacM)).unwrap();
    assert!(same(&r, &e1));
}

#[test]
fn kernel_route_matches_nabla_route() {
    ops_agree(&HallOperator::p(1, 1, 1).unwrap(), &HallOperator::p_nabla(1, 1), 4);
    for mm in [-1, 1, 2] {
        for k in 1..=2 {
            ops_agree(&HallOperator::e(k, mm, 1).unwrap(), &HallOperator::e_nabla(k, mm), 5);
        }
    }
}

#[test]
fn same_slope_generators_commute() {
    let zero = QTRational::zero();
    let a = HallOperator::p(1, 1, 2).unwrap();
    let b = HallOperator::p(2, 1, 2).unwrap();
    assert!(commutator_check(&a, &b, &zero, 2).unwrap());
    let c = HallOperator::p(1, 1, 3).unwrap();
    assert!(commutator_check(&c, &c, &zero, 2).unwrap());
    let e = HallOperator::e(2, 1, 2).unwrap();
    assert!(commutator_check(&a, &e, &zero, 1).unwrap());
    let mp1 = HallOperator::MultiplyBy(power(1));
    let mp2 = HallOperator::MultiplyBy(power(2));
    assert!(commutator_check(&mp1, &mp2, &zero, 3).unwrap());
}

#[test]
fn different_slopes_do_not_commute() {
    let a = HallOperator::p(1, 0, 1).unwrap();
    let b = HallOperator::p(1, 1, 1).unwrap();
    assert!(!commutator_check(&a, &b, &QTRational::zero(), 1).unwrap());
}

/// `[p_{n,m}, p_{-n,-m}] = (1 - q^{-1}) (s^{-n} - s^n) / ((q - t)(1 - t^{-1}))`.
#[test]
fn heisenberg_relation_for_lowering_operators() {
    for (mm, n) in [(1, 2), (1, 3), (0, 1), (2, 1), (-1, 2)] {
        let a = HallOperator::p(1, mm, n).unwrap();
        let b = HallOperator::lowering(1, mm, n).unwrap();
        let ni = n as i64;
        let diff = &QTRational::monomial(QTMonomial::s(-ni)) - &QTRational::monomial(QTMonomial::s(ni));
        let den = &(&QTRational::q() - &QTRational::t()) * &one_minus(1, QTMonomial::t(-1));
        let expected = (&one_minus(1, QTMonomial::q(-1)) * &diff).checked_div(&den).unwrap();
        assert!(commutator_check(&a, &b, &expected, 2).unwrap(), "slope {mm}/{n}");
    }
}

/// With `p_{-k}^{m/n}` normalized as implemented, the commutator is
/// `s^2 (s^n - s^{-n}) / (s - s^{-1})`.
#[test]
fn renormalized_commutator_is_a_scalar() {
    for (mm, n) in [(1, 2), (1, 3)] {
        let a = HallOperator::p(1, mm, n).unwrap();
        let b = HallOperator::p_negative(1, mm, n).unwrap();
        let ni = n as i64;
        let num = &QTRational::monomial(QTMonomial::s(ni)) - &QTRational::monomial(QTMonomial::s(-ni));
        let den = &QTRational::monomial(QTMonomial::s(1)) - &QTRational::monomial(QTMonomial::s(-1));
        let expected = num.checked_div(&den).unwrap().mul_monomial(QTMonomial::s(2));
        assert!(commutator_check(&a, &b, &expected, 2).unwrap());
    }
}

#[test]
fn negative_generators() {
    let e1 = HallOperator::e_negative(1, 1, 2).unwrap();
    let p1 = HallOperator::p_negative(1, 1, 2).unwrap();
    ops_agree(&e1, &p1, 4);
    let f = SymFunc::from_terms(Basis::MacM, enumerate_partitions(4).map(|l| (l, QTRational::one())));
    let g = negative_e_action(2, 1, 2, &f).unwrap();
    assert!(g.terms().all(|(l, _)| l.size() == 0));
    assert!(!g.is_zero());
    assert!(negative_e_action(1, 1, 2, &m(&[1])).unwrap().is_zero());
}

#[test]
fn adjoint_of_multiplication() {
    // The adjoint of p_1 for the Macdonald product is (1-q)/(1-t) d/dp_1.
    let a = HallOperator::Adjoint { base: Box::new(HallOperator::MultiplyBy(power(1))), scalar: QTRational::one() };
    let f = SymFunc::basis_element(Basis::PowerSum, Partition::of(&[2, 1, 1]));
    let c = one_minus(1, QTMonomial::q(1)).checked_div(&one_minus(1, QTMonomial::t(1))).unwrap();
    let expected =
        SymFunc::basis_element(Basis::PowerSum, Partition::of(&[2, 1])).scale(&(&c * &QTRational::from_int(2)));
    assert!(same(&act(&a, &f).unwrap(), &expected));
}

#[test]
fn slope_infinity_eigenvalues() {
    let l = Partition::of(&[2, 1]);
    let op = HallOperator::DiagonalInfinity { k: 1, origin: IndexOrigin::One };
    let tail = QTRational::monomial(QTMonomial::new(-1, -3)).checked_div(&one_minus(1, QTMonomial::t(-1))).unwrap();
    let ev = &(&QTRational::monomial(QTMonomial::new(1, -1)) + &QTRational::monomial(QTMonomial::t(-2))) + &tail;
    assert_eq!(act(&op, &m(&[2, 1])).unwrap(), m(&[2, 1]).scale(&ev));
    assert_eq!(infinity_eigenvalue(&l, IndexOrigin::Zero), ev.mul_monomial(QTMonomial::t(1)));
    // Empty partition: the whole geometric tail.
    let e = infinity_eigenvalue(&Partition::empty(), IndexOrigin::One);
    assert_eq!(e, QTRational::monomial(QTMonomial::new(-1, -1)).checked_div(&one_minus(1, QTMonomial::t(-1))).unwrap());
}

#[test]
fn degree_bound_is_enforced() {
    let op = HallOperator::p(1, 1, 3).unwrap();
    let big = SymFunc::basis_element(Basis::MacM, Partition::of(&[6]));
    assert!(matches!(act(&op, &big), Err(HallError::Sym(SymError::DegreeBound { .. }))));
}

#[test]
fn kernel_coefficients_vanish_off_support() {
    // e_1^{1/2} · 1 only reaches partitions of 2.
    let r = e_action(1, 1, 2, &SymFunc::one(Basis::MacM)).unwrap();
    assert!(r.terms().all(|(l, _)| l.size() == 2));
    assert_eq!(r.len(), enumerate_partitions(2).count());
}

fn random_m(d: usize, coeffs: &[i64]) -> SymFunc {
    SymFunc::from_terms(
        Basis::MacM,
        enumerate_partitions(d).zip(coeffs.iter().cycle()).map(|(l, &c)| (l, QTRational::from_int(c))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    #[test]
    fn adjoint_identity(d in 0usize..=2, cf in prop::collection::vec(-3i64..=3, 5), cg in prop::collection::vec(-3i64..=3, 7)) {
        let a = HallOperator::p(1, 1, 2).unwrap();
        let adj = HallOperator::Adjoint { base: Box::new(a.clone()), scalar: QTRational::one() };
        let f = random_m(d, &cf);
        let g = random_m(d + 2, &cg);
        let lhs = macdonald_inner(&act(&a, &f).unwrap(), &g).unwrap();
        let rhs = macdonald_inner(&f, &act(&adj, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
