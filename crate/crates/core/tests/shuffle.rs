use mnpieri::qt::{one_minus, QTMonomial, QTRational};
use mnpieri::shapes::{all_skew_shapes, Cell, Partition, SkewShape};
use mnpieri::shuffle::*;
use proptest::prelude::*;

fn frac(a: QTRational, b: QTRational) -> QTRational {
    &a / &b
}

fn one_minus_q_over_t_minus_q() -> QTRational {
    frac(one_minus(1, QTMonomial::q(1)), &QTRational::t() - &QTRational::q())
}

fn shapes_of_size(n: usize) -> Vec<SkewShape> {
    all_skew_shapes(n + 3).into_iter().filter(|s| s.size() == n).collect()
}

#[test]
fn single_variable_terms() {
    for m in -3..=3 {
        let w = QTMonomial::new(2, -1);
        let want = one_minus_q_over_t_minus_q().mul_monomial(w.pow(m));
        for ker in [ShuffleKernel::e(1, m, 1).unwrap(), ShuffleKernel::p(1, m, 1).unwrap()] {
            assert_eq!(kernel_term(&ker, &[w]).unwrap(), want, "{ker}");
            let pt = EvaluationPoint::from_cells(&[Cell::new(2, 1)]);
            assert_eq!(sym_evaluate(&ker, &pt).unwrap(), want, "{ker}");
        }
    }
    let e0 = ShuffleKernel::e(1, 0, 1).unwrap();
    let origin = EvaluationPoint::from_cells(&[Cell::new(0, 0)]);
    assert_eq!(sym_evaluate(&e0, &origin).unwrap(), one_minus_q_over_t_minus_q());
}

#[test]
fn count_mismatch_is_an_error() {
    let ker = ShuffleKernel::p(1, 1, 2).unwrap();
    let pt = EvaluationPoint::single_row(3);
    assert_eq!(sym_evaluate(&ker, &pt), Err(ShuffleError::CountMismatch { got: 3, want: 2 }));
}

#[test]
fn hook_evaluation_matches_closed_form() {
    for (m, n, k) in [(1, 2, 1), (1, 3, 1), (2, 3, 1), (1, 2, 2), (-1, 2, 2), (3, 2, 2), (0, 1, 3)] {
        let ker = ShuffleKernel::p(k, m, n).unwrap();
        for l in 1..=n * k {
            let got = sym_evaluate(&ker, &hook_point(k, n, l)).unwrap();
            assert_eq!(got, eval_hook(k, m, n, l).unwrap(), "{ker}, l = {l}");
        }
    }
}

#[test]
fn hook_formula_rejects_bad_parameters() {
    assert!(eval_hook(1, 1, 2, 0).is_err());
    assert!(eval_hook(1, 1, 2, 3).is_err());
    assert!(eval_hook(1, 2, 2, 1).is_err());
}

#[test]
fn norm_map_normalizations() {
    for (m, n) in [(1, 2), (1, 3), (2, 3), (-1, 2), (0, 1), (3, 1)] {
        for k in 1..=2 {
            let p = phi_norm_kernel(&ShuffleKernel::p(k, m, n).unwrap()).unwrap();
            assert!(p.is_one(), "phi(P_{k}^{m}/{n}) = {p}");
            let e = phi_norm_kernel(&ShuffleKernel::e(k, m, n).unwrap()).unwrap();
            let want = if k == 1 { QTRational::one() } else { QTRational::zero() };
            assert_eq!(e, want, "phi(E_{k}^{m}/{n})");
        }
    }
}

#[test]
fn e_and_p_agree_in_one_variable_per_slope_unit() {
    // for k = 1 the two families are the same element
    for (m, n) in [(1, 2), (2, 3), (-1, 3)] {
        let p = ShuffleKernel::p(1, m, n).unwrap();
        let e = ShuffleKernel::e(1, m, n).unwrap();
        for sh in shapes_of_size(n).into_iter().take(8) {
            let pt = EvaluationPoint::from_skew(&sh);
            assert_eq!(sym_evaluate(&p, &pt), sym_evaluate(&e, &pt), "{sh}");
        }
    }
}

#[test]
fn deformation_exponents_do_not_matter() {
    let ker = ShuffleKernel::e(2, 1, 2).unwrap();
    for sh in shapes_of_size(4).into_iter().take(10) {
        let pt = EvaluationPoint::from_skew(&sh);
        let base = sym_evaluate(&ker, &pt).unwrap();
        for f in [|d: i64| 3 * d + 1, |d: i64| -d, |d: i64| d * d + 2 * d] {
            assert_eq!(sym_evaluate(&ker, &pt.map_deformation(f)).unwrap(), base, "{sh}");
        }
    }
}

#[test]
fn rows_can_be_listed_in_any_order() {
    let ker = ShuffleKernel::p(2, 1, 2).unwrap();
    for sh in shapes_of_size(4).into_iter().take(12) {
        let pt = EvaluationPoint::from_skew(&sh);
        let mut rev = pt.clone();
        rev.boxes.reverse();
        assert_eq!(sym_evaluate(&ker, &pt).unwrap(), sym_evaluate(&ker, &rev).unwrap(), "{sh}");
    }
}

#[test]
fn inverted_skew_points() {
    let p = ShuffleKernel::p(1, 1, 2).unwrap();
    for sh in shapes_of_size(2) {
        assert!(invert_check(&p, &EvaluationPoint::from_skew(&sh)).unwrap(), "{sh}");
    }
}

#[test]
fn inversion_at_random_points() {
    for ker in [
        ShuffleKernel::p(1, 1, 1).unwrap(),
        ShuffleKernel::p(1, 1, 2).unwrap(),
        ShuffleKernel::p(2, 0, 1).unwrap(),
        ShuffleKernel::p(2, 1, 2).unwrap(),
    ] {
        assert!(invert_check_trials(&ker, 10, 11).unwrap(), "{ker}");
    }
}

#[test]
fn wheel_conditions_and_negative_control() {
    for (m, n) in [(1, 2), (1, 3), (2, 3), (-1, 2)] {
        for k in 1..=4 / n {
            for ker in [ShuffleKernel::p(k, m, n).unwrap(), ShuffleKernel::e(k, m, n).unwrap()] {
                assert!(wheel_check(&ker), "{ker}");
                if ker.n_vars() >= 3 {
                    assert!(!wheel_check(&ker.corrupted()), "corrupted {ker}");
                }
            }
        }
    }
    assert!(wheel_check(&ShuffleKernel::e(1, 1, 2).unwrap().corrupted()));
}

#[test]
fn coproduct_of_e2() {
    let left = EvaluationPoint::from_weights(&[QTMonomial::new(3, -2), QTMonomial::new(-1, 5)]);
    let right = EvaluationPoint::from_weights(&[QTMonomial::new(2, 7), QTMonomial::new(-4, 1)]);
    let e1 = ShuffleKernel::e(1, 1, 2).unwrap();
    let want = &sym_evaluate(&e1, &left).unwrap() * &sym_evaluate(&e1, &right).unwrap();
    let e2 = ShuffleKernel::e(2, 1, 2).unwrap();
    assert_eq!(coproduct_limit(&e2, 1, &left, &right).unwrap(), want);
    let p2 = ShuffleKernel::p(2, 1, 2).unwrap();
    assert!(coproduct_limit(&p2, 1, &left, &right).unwrap().is_zero());
    assert!(coproduct_limit(&e2, 2, &left, &right).is_err());
}

#[test]
fn xi_expansion_of_a_single_scaled_variable() {
    // E_1^{3/1}(ξc) / ξ^3 → E_1^{3/1}(c): the leading coefficient is at order -3
    let ker = ShuffleKernel::e(1, 3, 1).unwrap();
    let c = QTMonomial::new(1, 2);
    let s = xi_series(&ker, &EvaluationPoint::from_weights(&[c]), &EvaluationPoint::from_weights(&[]), 0).unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!(s[&-3], one_minus_q_over_t_minus_q().mul_monomial(c.pow(3)));
}

#[test]
fn degree_bounds_for_e_kernels() {
    let ws = [
        QTMonomial::new(3, -2),
        QTMonomial::new(-1, 5),
        QTMonomial::new(2, 7),
        QTMonomial::new(-4, 1),
        QTMonomial::new(5, 3),
        QTMonomial::new(-2, -6),
    ];
    for (m, n) in [(1, 2), (1, 3), (2, 3), (-1, 2)] {
        for k in 1..=6 / n {
            let ker = ShuffleKernel::e(k, m, n).unwrap();
            let nv = ker.n_vars();
            for i in (1..nv).filter(|i| i % n != 0) {
                let l = EvaluationPoint::from_weights(&ws[..i]);
                let r = EvaluationPoint::from_weights(&ws[i..nv]);
                assert!(xi_degree_below(&ker, &l, &r).unwrap(), "{ker}, i = {i}");
            }
        }
    }
}

#[test]
fn shuffle_product_of_constants() {
    let one = ShuffleKernel::e(1, 0, 1).unwrap();
    let got = shuffle_product_eval(&one, &one, &EvaluationPoint::single_row(2)).unwrap();
    // Sym ω(z1/z2) at (1, q): the arrangement (1, q) gives ω(1/q) = 0
    let c = one_minus_q_over_t_minus_q();
    let om = omega(&QTRational::q());
    assert_eq!(got, &(&c * &c) * &om);
}

#[test]
fn same_slope_kernels_commute() {
    let pts = [
        vec![QTMonomial::new(3, -2), QTMonomial::new(-1, 5), QTMonomial::new(2, 7)],
        vec![QTMonomial::new(1, 1), QTMonomial::new(4, -3), QTMonomial::new(-2, 2)],
    ];
    let a = ShuffleKernel::p(1, 1, 1).unwrap();
    let b = ShuffleKernel::p(2, 1, 1).unwrap();
    for w in pts {
        let pt = EvaluationPoint::from_weights(&w);
        assert_eq!(shuffle_product_eval(&a, &b, &pt).unwrap(), shuffle_product_eval(&b, &a, &pt).unwrap());
    }
}

#[test]
fn singular_undeformed_point_is_reported() {
    // two boxes on a diagonal with equal deformation: single terms are singular
    let ker = ShuffleKernel::p(1, 1, 2).unwrap();
    let pt = EvaluationPoint::from_weights(&[Cell::new(0, 0).weight(), Cell::new(1, 1).weight()]);
    assert_eq!(sym_evaluate(&ker, &pt), Err(ShuffleError::Pole));
}

#[test]
fn straight_shapes_from_partitions() {
    let pt = EvaluationPoint::from_skew(&SkewShape::straight(Partition::of(&[2, 1])));
    let mut w = pt.weights();
    w.sort();
    let mut want = vec![Cell::new(0, 0).weight(), Cell::new(1, 0).weight(), Cell::new(0, 1).weight()];
    want.sort();
    assert_eq!(w, want);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn homogeneity(a in -3i64..=3, b in -3i64..=3, idx in 0usize..20, m in -2i64..=2) {
        let shapes = shapes_of_size(3);
        let sh = &shapes[idx % shapes.len()];
        let n = 3;
        prop_assume!(m % 3 != 0);
        let ker = ShuffleKernel::e(1, m, n).unwrap();
        let pt = EvaluationPoint::from_skew(sh);
        let c = QTMonomial::new(a, b);
        let base = sym_evaluate(&ker, &pt).unwrap();
        let scaled = sym_evaluate(&ker, &pt.scaled(c)).unwrap();
        prop_assert_eq!(scaled, base.mul_monomial(c.pow(ker.degree())));
    }

    #[test]
    fn numeric_and_symbolic_agree(seed in 0u64..1000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let ker = ShuffleKernel::p(1, 1, 2).unwrap();
        let (q, t, _) = random_point(&mut rng, 2);
        let ws = [QTMonomial::new(2, -1), QTMonomial::new(-1, 3)];
        let pt = EvaluationPoint::from_weights(&ws);
        let sym = sym_evaluate(&ker, &pt).unwrap();
        let z: Vec<_> = ws.iter().map(|w| q.pow((w.qexp2 / 2) as i32) * t.pow((w.texp2 / 2) as i32)).collect();
        let num = eval_numeric(&ker, &z, &q, &t);
        prop_assume!(num.is_ok());
        prop_assert_eq!(mnpieri::qt::eval_qt(&sym, &q, &t).unwrap(), num.unwrap());
    }
}
