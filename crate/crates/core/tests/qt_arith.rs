use mnpieri::qt::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn r(s: &str) -> QTRational {
    s.parse().unwrap()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[test]
fn documented_examples() {
    let q = QTRational::q();
    assert!((&q - &q).is_zero());
    assert_eq!(r("1 - q^{2}") / r("1 - q"), r("1 + q"));
    assert_eq!(r("t - q") / r("q - t"), QTRational::from_int(-1));
    let c = r("q - t + q^{-1}t^{-1}");
    assert_eq!(deg_se(&c).unwrap(), HalfInt::from_int(1));
    assert_eq!(deg_nw(&c).unwrap(), HalfInt::from_int(-2));
    assert_eq!(hd(&c).unwrap(), r("q - t"));
    assert_eq!(ld(&c).unwrap(), r("q^{-1}t^{-1}"));
    let five = QTRational::from_int(5);
    assert_eq!(deg_se(&five).unwrap(), HalfInt(0));
    assert_eq!(deg_nw(&five).unwrap(), HalfInt(0));
    let m = r("3q^{2}t^{-1}");
    assert_eq!(hd(&m).unwrap(), m);
    assert_eq!(ld(&m).unwrap(), m);
    assert!(deg_se(&QTRational::zero()).is_err());
    assert_eq!(hd(&r("1/(1-q)")), Err(QTError::NotPolynomial));
}

#[test]
fn limit_examples() {
    let c = |s: &str| r(s);
    // (eps^2 - 1) / (eps - 1)
    let f = EpsRational::new(vec![c("-1"), c("0"), c("1")], vec![c("-1"), c("1")]).unwrap();
    assert_eq!(f.limit_at_one().unwrap(), QTRational::from_int(2));
    // (eps - 1) / (eps - 1)^2
    let g = EpsRational::new(vec![c("-1"), c("1")], vec![c("1"), c("-2"), c("1")]).unwrap();
    assert_eq!(g.limit_at_one(), Err(QTError::PoleAtTarget));
    // (q (eps-1) + (1-t)(eps-1)) / (eps - 1)
    let h = EpsRational::new(vec![c("-q - 1 + t"), c("q + 1 - t")], vec![c("-1"), c("1")]).unwrap();
    assert_eq!(h.limit_at_one().unwrap(), c("q + 1 - t"));
}

#[test]
fn eval_examples() {
    assert_eq!(eval_qt(&r("q + t"), &int(2), &int(3)).unwrap(), int(5));
    assert_eq!(eval_qt(&r("1/(q - t)"), &int(2), &int(2)), Err(QTError::Pole));
    let s = QTRational::s();
    assert_eq!(eval_qt(&s, &int(4), &int(9)).unwrap(), Rational::new(3.into(), 2.into()));
    assert_eq!(eval_qt(&s, &int(2), &int(9)), Err(QTError::NonSquareBase));
}

#[test]
fn canonical_display() {
    let f = r("(1 - q^{1}t^{-1}) / (1 - t^{1})");
    assert_eq!(f.to_string(), "(q^{1}t^{-1} - 1) / (t^{1} - 1)");
    assert_eq!(r("q^{1/2} + 1/3").to_string(), "q^{1/2} + 1/3");
    assert_eq!(QTRational::s().to_string(), "q^{-1/2}t^{1/2}");
    assert_eq!(QTRational::zero().to_string(), "0");
}

fn arb_poly() -> impl Strategy<Value = QTPolynomial> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4), 0..4)
        .prop_map(|ts| QTPolynomial::from_terms(ts.into_iter().map(|(a, b, c)| (QTMonomial::new(a, b), int(c)))))
}

fn arb_rat() -> impl Strategy<Value = QTRational> {
    (arb_poly(), arb_poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            QTRational::from_poly(n)
        } else {
            QTRational::new(n, d).unwrap()
        }
    })
}

fn arb_half_rat() -> impl Strategy<Value = QTRational> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4), 1..4).prop_map(|ts| {
        QTRational::from_poly(QTPolynomial::from_terms(
            ts.into_iter().map(|(a, b, c)| (QTMonomial::from_doubled(a, b), int(c))),
        ))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn difference_zero_iff_identical(a in arb_rat(), b in arb_rat()) {
        prop_assert_eq!((&a - &b).is_zero(), a == b);
        let back = &(&a + &b) - &b;
        prop_assert_eq!(back.to_string(), a.to_string());
    }

    #[test]
    fn degree_additivity(a in arb_rat(), b in arb_rat()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(deg_se(&p).unwrap(), deg_se(&a).unwrap() + deg_se(&b).unwrap());
        prop_assert_eq!(deg_nw(&p).unwrap(), deg_nw(&a).unwrap() + deg_nw(&b).unwrap());
    }

    #[test]
    fn degree_of_sum(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (fa, fb) = (QTRational::from_poly(a), QTRational::from_poly(b));
        let s = &fa + &fb;
        prop_assume!(!s.is_zero());
        let m = deg_se(&fa).unwrap().max(deg_se(&fb).unwrap());
        let ds = deg_se(&s).unwrap();
        prop_assert!(ds <= m);
        let cancels = deg_se(&fa).unwrap() == deg_se(&fb).unwrap()
            && (hd(&fa).unwrap() + hd(&fb).unwrap()).is_zero();
        prop_assert_eq!(ds == m, !cancels);
    }

    #[test]
    fn round_trip(a in arb_rat(), h in arb_half_rat()) {
        for x in [a, h] {
            let s = x.to_string();
            let y: QTRational = s.parse().unwrap();
            prop_assert_eq!(&y, &x);
            prop_assert_eq!(y.to_string(), s);
        }
    }

    #[test]
    fn limit_ignores_common_factors(a in arb_poly(), b in arb_poly(), k in 0usize..=5) {
        prop_assume!(!b.is_zero());
        let f = EpsRational::new(
            vec![QTRational::from_poly(a.clone()), QTRational::from_int(1)],
            vec![QTRational::from_poly(b.clone())],
        ).unwrap();
        let base = f.limit_at_one().unwrap();
        prop_assert_eq!(f.times_eps_minus_one(k).limit_at_one().unwrap(), base);
    }
}
