use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::indmodule::{AtQ, InducedModule, KVector, ModuleOp, Step, SubmoduleKind};
use crate::scalars::rat;

const ORDER: usize = DEFAULT_JET_ORDER;

fn g(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

fn lambdas() -> Vec<GaussRat> {
    vec![
        g(0),
        g(1),
        g(-1),
        g(2),
        g(-2),
        GaussRat::from_parts((2, 1), (1, 1)),
        GaussRat::from_frac(1, 3),
    ]
}

#[test]
fn classical_limit_of_transition_coefficients() {
    for lam in lambdas() {
        let l = ExponentLambda::new(lam.clone());
        for n in -10..=10 {
            let one = &lam + &g(1);
            let tp = aform_coeff(CoeffKind::TPlus, n, &l, ORDER).unwrap();
            assert_eq!(tp.ev1(), &one + &g(n), "t+ at n={n}, lambda={lam}");
            let tm = aform_coeff(CoeffKind::TMinus, n, &l, ORDER).unwrap();
            assert_eq!(tm.ev1(), &one - &g(n));
            assert_eq!(
                aform_coeff(CoeffKind::Theta, n, &l, ORDER).unwrap().ev1(),
                g(n)
            );
            assert!(aform_coeff(CoeffKind::TZero, n, &l, ORDER)
                .unwrap()
                .ev1()
                .is_zero());
        }
    }
}

#[test]
fn t0_jet_leading_term() {
    // (lambda^2 - 1) h^2 / (2h) to leading order
    let l = ExponentLambda::new(g(3));
    let j = aform_coeff(CoeffKind::TZero, 0, &l, ORDER).unwrap();
    assert_eq!(j.jet().valuation, 1);
    assert_eq!(j.jet().coeff(1), g(4));
    assert!(
        aform_coeff(CoeffKind::TZero, 2, &ExponentLambda::new(g(1)), ORDER)
            .unwrap()
            .jet()
            .is_zero()
    );
}

#[test]
fn wrong_limit_of_lambda_is_a_pole() {
    let l = ExponentLambda::with_sign(g(1), -1);
    // t+- stay integral (both terms flip sign); t0 picks up -4/(q - q^-1)
    let tp = aform_coeff(CoeffKind::TPlus, 0, &l, ORDER).unwrap();
    assert_eq!(tp.ev1(), g(-2));
    assert_eq!(
        aform_coeff(CoeffKind::TZero, 0, &l, ORDER),
        Err(LimitError::PoleAtOne)
    );
    assert!(aform_coeff(CoeffKind::Theta, 3, &l, ORDER).is_ok());
    assert_eq!(xyz_aform_action(0, &l, ORDER), Err(LimitError::PoleAtOne));
    assert_eq!(
        aform_coeff(CoeffKind::TPlus, 0, &ExponentLambda::new(g(0)), 1),
        Err(LimitError::OrderTooSmall)
    );
}

#[test]
fn integrality_of_xyz() {
    for lam in lambdas() {
        let l = ExponentLambda::new(lam);
        for n in -10..=10 {
            let a = xyz_aform_action(n, &l, ORDER).unwrap();
            for t in [&a.x, &a.y, &a.z] {
                assert!(t.iter().all(|j| j.is_zero() || j.valuation >= 0));
            }
        }
    }
}

#[test]
fn xyz_limit_is_the_classical_action() {
    for lam in lambdas() {
        let l = ExponentLambda::new(lam.clone());
        let m = ClassicalModule::new(1, lam.clone()).unwrap();
        for n in -6..=6 {
            let a = xyz_aform_action(n, &l, ORDER).unwrap();
            assert_eq!(
                ev1(&a.x).unwrap(),
                m.coefficients(ClassicalOp::X, n),
                "x at n={n}, lambda={lam}"
            );
            assert_eq!(ev1(&a.y).unwrap(), m.coefficients(ClassicalOp::Y, n));
            assert_eq!(ev1(&a.z).unwrap(), m.coefficients(ClassicalOp::Z, n));
        }
    }
}

#[test]
fn x_toward_next_k_type() {
    let l = ExponentLambda::new(g(2));
    for n in [-3, 0, 5] {
        let a = xyz_aform_action(n, &l, ORDER).unwrap();
        assert_eq!(a.x.up.const_term().unwrap(), GaussRat::from_frac(3 + n, 4));
    }
}

/// Coefficients of `op` on `zeta_n` read off the deformed module.
fn module_triple(m: &InducedModule<AtQ>, op: ModuleOp, n: i64) -> Tridiag<GaussRat> {
    Tridiag {
        up: m.matrix_entry(op, n + 2, n).unwrap(),
        diag: m.matrix_entry(op, n, n).unwrap(),
        down: m.matrix_entry(op, n - 2, n).unwrap(),
    }
}

#[test]
fn specialization_matches_the_deformed_module() {
    for (q0, lam) in [
        (rat(4, 1), 1),
        (rat(2, 1), 3),
        (rat(1, 4), -2),
        (rat(2, 3), 0),
    ] {
        let mu = GaussRat::real(rational_pow(&q0, lam));
        let d = AtQ::new(q0.clone()).unwrap();
        let delta = GaussRat::real(&q0 - q0.recip());
        let one = g(1);
        for eps in [1i8, -1] {
            let m = InducedModule::new(d.clone(), eps, mu.clone()).unwrap();
            let start = if eps == 1 { -6 } else { -5 };
            for n in (start..=6).step_by(2) {
                let a = xyz_at(n, &q0, &mu).unwrap();
                let bx = module_triple(&m, ModuleOp::X, n);
                let by = module_triple(&m, ModuleOp::Y, n);
                let bz = module_triple(&m, ModuleOp::Z, n);
                let shift = |t: &Tridiag<GaussRat>, c: &GaussRat| Tridiag {
                    up: &t.up / &delta,
                    diag: &(&t.diag - c) / &delta,
                    down: &t.down / &delta,
                };
                assert_eq!(a.x, shift(&bx, &one), "x at q0={q0}, n={n}");
                assert_eq!(a.y, shift(&by, &one));
                assert_eq!(a.z, shift(&bz, &GaussRat::zero()));
            }
        }
    }
}

#[test]
fn coefficients_at_q_match_transition_coefficients() {
    for q0 in [rat(2, 1), rat(4, 1), rat(1, 4)] {
        let d = AtQ::new(q0.clone()).unwrap();
        let delta = GaussRat::real(&q0 - q0.recip());
        let two = GaussRat::real(&q0 + q0.recip());
        for lam in -3..=3 {
            let mu = GaussRat::real(rational_pow(&q0, lam));
            let l = ExponentLambda::new(g(lam));
            let m = InducedModule::new(d.clone(), 1, mu.clone()).unwrap();
            for n in (-8..=8).step_by(2) {
                let c = |k| aform_coeff(k, n, &l, ORDER).unwrap().at(&q0, &mu).unwrap();
                assert_eq!(
                    c(CoeffKind::TPlus),
                    &m.transition_coeff(Step::Up, n).unwrap() / &delta
                );
                assert_eq!(
                    c(CoeffKind::TMinus),
                    &m.transition_coeff(Step::Down, n).unwrap() / &delta
                );
                assert_eq!(
                    c(CoeffKind::TZero),
                    &(&m.transition_coeff(Step::Diag, n).unwrap() - &two) / &delta
                );
            }
        }
    }
}

#[test]
fn closed_forms() {
    let c = aform_coeff(CoeffKind::TPlus, 2, &ExponentLambda::new(g(1)), ORDER).unwrap();
    assert_eq!(c.closed_form(), "(L*q^3 - L^-1*q^-3)/(q - q^-1), L = q^(1)");
    // (4*64 - 1/(4*64)) / (4 - 1/4)
    assert_eq!(
        c.at(&rat(4, 1), &g(4)).unwrap(),
        GaussRat::from_frac(4369, 64)
    );
}

#[test]
fn classical_examples() {
    let lam = GaussRat::from_frac(1, 3);
    let m = ClassicalModule::new(1, lam.clone()).unwrap();
    let kp = classical_act(&m, ClassicalOp::KappaPlus, &KVector::basis(0)).unwrap();
    assert_eq!(kp, KVector::from_entries([(2, &lam + &g(1))]));
    let km = classical_act(&m, ClassicalOp::KappaMinus, &KVector::basis(2)).unwrap();
    assert_eq!(km, KVector::from_entries([(0, &lam - &g(1))]));
    let odd = ClassicalModule::new(-1, lam).unwrap();
    assert_eq!(
        classical_act(&odd, ClassicalOp::Theta, &KVector::basis(5)).unwrap(),
        KVector::from_entries([(5, g(5))])
    );
    assert_eq!(
        classical_act(&odd, ClassicalOp::Theta, &KVector::basis(4)),
        Err(LimitError::ParityMismatch(4))
    );
}

fn bracket(
    m: &ClassicalModule,
    a: ClassicalOp,
    b: ClassicalOp,
    v: &KVector<GaussRat>,
) -> KVector<GaussRat> {
    let ab = classical_act(m, a, &classical_act(m, b, v).unwrap()).unwrap();
    let ba = classical_act(m, b, &classical_act(m, a, v).unwrap()).unwrap();
    ab.sub(&ba)
}

fn small_gauss() -> impl Strategy<Value = GaussRat> {
    (-5i64..=5, 1i64..=4, -5i64..=5).prop_map(|(a, d, b)| GaussRat::from_parts((a, d), (b, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_sl2_relations(lam in small_gauss(), odd in any::<bool>(),
                               coeffs in prop::collection::vec(small_gauss(), 1..5), start in -4i64..4) {
        use ClassicalOp::*;
        let eps = if odd { -1 } else { 1 };
        let m = ClassicalModule::new(eps, lam).unwrap();
        let base = if odd { 2 * start + 1 } else { 2 * start };
        let v = KVector::from_entries(coeffs.into_iter().enumerate().map(|(k, c)| (base + 2 * k as i64, c)));
        let two = g(2);
        prop_assert_eq!(bracket(&m, H, E, &v), classical_act(&m, E, &v).unwrap().scale(&two));
        prop_assert_eq!(bracket(&m, H, F, &v), classical_act(&m, F, &v).unwrap().scale(&-&two));
        prop_assert_eq!(bracket(&m, E, F, &v), classical_act(&m, H, &v).unwrap());
        // theta = i(E - F)
        let ef = classical_act(&m, E, &v).unwrap().sub(&classical_act(&m, F, &v).unwrap());
        prop_assert_eq!(ef.scale(&GaussRat::i()), classical_act(&m, Theta, &v).unwrap());
        prop_assert_eq!(bracket(&m, KappaPlus, KappaMinus, &v), classical_act(&m, Theta, &v).unwrap().scale(&g(4)));
    }
}

#[test]
fn classical_lattices() {
    use SubmoduleKind::*;
    let c = classical_classify(1, &g(3)).unwrap();
    assert_eq!(c.special, Some(3));
    let kinds: Vec<_> = c.submodules.iter().map(|s| s.kind).collect();
    assert_eq!(kinds, vec![Zero, Above, Below, AboveBelow, All]);
    assert!(c.submodules[1].contains(4) && !c.submodules[1].contains(2));
    assert_eq!(c.composition_series[2], ClassicalSimple::FiniteDim { n: 3 });

    let c = classical_classify(1, &g(-3)).unwrap();
    assert_eq!(c.composition_series[0], ClassicalSimple::FiniteDim { n: 3 });
    assert_eq!(c.submodules[1].kind, Middle);

    let c = classical_classify(1, &GaussRat::from_frac(1, 2)).unwrap();
    assert_eq!(c.special, None);
    assert_eq!(c.submodules.len(), 2);

    // parity mismatch: 2 is even, eps = +1 needs odd
    assert_eq!(classical_classify(1, &g(2)).unwrap().special, None);
    assert_eq!(classical_classify(-1, &g(2)).unwrap().special, Some(2));
    let c = classical_classify(-1, &g(0)).unwrap();
    assert_eq!(
        c.composition_series,
        vec![
            ClassicalSimple::DiscretePlus { n: 0 },
            ClassicalSimple::DiscreteMinus { n: 0 }
        ]
    );
    let c = classical_classify(1, &g(-2)).unwrap();
    assert_eq!(
        c.composition_series,
        vec![ClassicalSimple::Principal {
            eps: 1,
            lambda: g(2)
        }]
    );
}

#[test]
fn correspondence_examples() {
    let r = correspondence_check(1, &g(3), &rat(2, 1)).unwrap();
    assert!(r.matches);
    assert_eq!(r.quantum.len(), 5);
    assert!(correspondence_check(1, &g(2), &rat(2, 1)).unwrap().matches);
    let r = correspondence_check(1, &g(0), &rat(2, 1)).unwrap();
    assert!(r.matches && r.quantum.len() == 2);
    assert!(
        correspondence_check(-1, &GaussRat::from_frac(1, 2), &rat(3, 2))
            .unwrap()
            .matches
    );
}

#[test]
fn correspondence_sweep() {
    for q0 in [rat(2, 1), rat(3, 2), rat(2, 3)] {
        for eps in [1i8, -1] {
            for lam in -4..=4 {
                let r = correspondence_check(eps, &g(lam), &q0).unwrap();
                assert!(r.matches, "eps={eps}, lambda={lam}, q0={q0}");
            }
        }
    }
}

#[test]
fn correspondence_errors() {
    let q0: BigRational = rat(2, 1);
    assert_eq!(
        correspondence_check(1, &GaussRat::from_parts((0, 1), (5, 1)), &q0),
        Err(LimitError::HypothesisViolated)
    );
    assert_eq!(
        correspondence_check(1, &GaussRat::from_parts((2, 1), (1, 1)), &q0),
        Err(LimitError::IrrationalParameter)
    );
    assert_eq!(
        correspondence_check(1, &GaussRat::from_frac(1, 3), &q0),
        Err(LimitError::IrrationalParameter)
    );
    assert!(matches!(
        correspondence_check(1, &g(1), &rat(1, 1)),
        Err(LimitError::Ind(_))
    ));
}
