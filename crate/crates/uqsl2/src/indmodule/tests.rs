use super::*;
use crate::harish::{casimir, ev_char};
use crate::pbw::{normal_form1, Gen, GenWord};
use crate::scalars::{qint, rat, GaussRat, RatFunc};

fn q(k: i64) -> RatFunc {
    RatFunc::q_pow(k)
}

fn generic(eps: i8, lambda: RatFunc) -> InducedModule<Generic> {
    InducedModule::new(Generic, eps, lambda).unwrap()
}

fn op(g: Gen) -> ModuleOp {
    match g {
        Gen::Theta => ModuleOp::Theta,
        Gen::X => ModuleOp::X,
        Gen::Y => ModuleOp::Y,
        Gen::Z => ModuleOp::Z,
        _ => unreachable!(),
    }
}

/// `sum c * word` applied letter by letter.
fn apply_rel<D: QDomain>(
    m: &InducedModule<D>,
    rel: &[(D::S, Vec<Gen>)],
    v: &KVector<D::S>,
) -> KVector<D::S> {
    let mut out = KVector::zero();
    for (c, w) in rel {
        let mut cur = v.clone();
        for g in w.iter().rev() {
            cur = m.act(op(*g), &cur).unwrap();
        }
        out.add_scaled(&cur, c);
    }
    out
}

fn relations<D: QDomain>(d: &D) -> Vec<Vec<(D::S, Vec<Gen>)>> {
    use Gen::*;
    let one = D::S::one;
    let two = d.qint(2);
    vec![
        vec![(one(), vec![X, Z]), (d.q_pow(2).neg(), vec![Z, X])],
        vec![(one(), vec![Z, Y]), (d.q_pow(2).neg(), vec![Y, Z])],
        vec![
            (one(), vec![X, Y]),
            (d.q_pow(2), vec![Z, Z]),
            (one().neg(), vec![]),
        ],
        vec![
            (one(), vec![Y, X]),
            (d.q_pow(-2), vec![Z, Z]),
            (one().neg(), vec![]),
        ],
        vec![
            (d.q_pow(1), vec![X, Theta]),
            (d.q_pow(-1).neg(), vec![Theta, X]),
            (two.neg(), vec![Z]),
        ],
        vec![
            (d.q_pow(1), vec![Theta, Y]),
            (d.q_pow(-1).neg(), vec![Y, Theta]),
            (two.neg(), vec![Z]),
        ],
        vec![
            (one(), vec![Theta, Z]),
            (one().neg(), vec![Z, Theta]),
            (one().neg(), vec![Y]),
            (one(), vec![X]),
        ],
    ]
}

fn relations_hold<D: QDomain>(m: &InducedModule<D>, window: i64) -> bool {
    let rels = relations(m.domain());
    m.parity().window(window).all(|n| {
        rels.iter()
            .all(|r| apply_rel(m, r, &KVector::basis(n)).is_zero())
    })
}

#[test]
fn relations_symbolic() {
    for (eps, lam) in [
        (1, &q(1) + &RatFunc::i()),
        (-1, q(3)),
        (1, RatFunc::from_int(3)),
        (-1, -q(-2)),
    ] {
        let m = generic(eps, lam);
        assert!(relations_hold(&m, 8));
        assert!(m
            .relation_failures(8, Parallelism::Sequential)
            .unwrap()
            .is_empty());
    }
}

#[test]
fn relations_concrete() {
    let cases = [
        (1, GaussRat::from_parts((3, 5), (4, 5)), rat(4, 1)),
        (-1, GaussRat::from_int(2), rat(3, 2)),
        (1, GaussRat::from_frac(3, 4), rat(2, 1)),
        (-1, GaussRat::from_parts((1, 1), (1, 1)), rat(2, 3)),
        (1, GaussRat::from_int(-8), rat(2, 1)),
    ];
    for (eps, lam, q0) in cases {
        let m = InducedModule::new(AtQ::new(q0).unwrap(), eps, lam).unwrap();
        assert!(relations_hold(&m, 12));
        assert!(m
            .relation_failures(12, Parallelism::Rayon)
            .unwrap()
            .is_empty());
    }
}

#[test]
fn transition_operators_recovered() {
    let m = generic(1, &q(1) + &RatFunc::from_int(2));
    let two = qint(2);
    for n in [-4i64, 0, 2, 6] {
        let v = KVector::basis(n);
        let x = m.act(ModuleOp::X, &v).unwrap();
        let y = m.act(ModuleOp::Y, &v).unwrap();
        let z = m.act(ModuleOp::Z, &v).unwrap();
        let combo = |a: RatFunc, b: RatFunc, c: RatFunc| {
            let mut out = x.scale(&a);
            out.add_scaled(&y, &b);
            out.add_scaled(&z, &c);
            out
        };
        let tp = combo(q(n), -q(-n), -two.clone());
        let tm = combo(q(-n), -q(n), two.clone());
        let t0 = combo(q(-1), q(1), &q(n) - &q(-n));
        assert_eq!(
            tp,
            KVector::basis(n + 2).scale(&m.transition_coeff(Step::Up, n).unwrap())
        );
        assert_eq!(
            tm,
            KVector::basis(n - 2).scale(&m.transition_coeff(Step::Down, n).unwrap())
        );
        assert_eq!(
            t0,
            KVector::basis(n).scale(&m.transition_coeff(Step::Diag, n).unwrap())
        );
    }
}

#[test]
fn transition_coefficients() {
    let m = generic(-1, RatFunc::one());
    assert!(m.transition_coeff(Step::Up, -1).unwrap().is_zero());
    assert_eq!(
        m.transition_coeff(Step::Up, 2),
        Err(IndError::ParityMismatch(2))
    );
    let lam = &q(1) + &RatFunc::i();
    let m = generic(1, lam.clone());
    let inv = lam.inv().unwrap();
    assert_eq!(
        m.transition_coeff(Step::Up, 4).unwrap(),
        &(&lam * &q(5)) - &(&inv * &q(-5))
    );
    assert_eq!(
        m.transition_coeff(Step::Diag, 4).unwrap(),
        m.transition_coeff(Step::Diag, -8).unwrap()
    );
}

#[test]
fn casimir_acts_by_scalar() {
    let lam = &q(2) + &RatFunc::from_int(3);
    let m = generic(1, lam.clone());
    let scalar = ev_char(&lam, &casimir()).unwrap();
    assert_eq!(scalar, &lam + &lam.inv().unwrap());
    let v = KVector::from_entries([(0, RatFunc::one()), (4, q(1)), (-6, RatFunc::i())]);
    assert_eq!(m.act_element(&casimir(), &v).unwrap(), v.scale(&scalar));
    assert_eq!(m.act(ModuleOp::Omega, &v).unwrap(), v.scale(&scalar));
}

#[test]
fn projections_and_grading() {
    let m = generic(-1, q(1));
    let v = KVector::from_entries([
        (1, RatFunc::one()),
        (3, RatFunc::from_int(2)),
        (-1, RatFunc::from_int(5)),
    ]);
    assert_eq!(
        m.act(ModuleOp::Proj(3), &v).unwrap(),
        KVector::basis(3).scale(&RatFunc::from_int(2))
    );
    assert_eq!(
        m.act(ModuleOp::MinusOneQ, &v).unwrap(),
        v.scale(&RatFunc::from_int(-1))
    );
    let e = generic(1, q(1));
    assert_eq!(
        e.act(ModuleOp::Proj(2), &KVector::basis(2)).unwrap(),
        KVector::basis(2)
    );
    assert!(e
        .act(ModuleOp::Proj(2), &KVector::basis(4))
        .unwrap()
        .is_zero());
    assert_eq!(
        e.act(ModuleOp::X, &KVector::basis(1)),
        Err(IndError::ParityMismatch(1))
    );
}

#[test]
fn words_act_like_their_normal_forms() {
    use Gen::*;
    let m = generic(1, &q(1) + &RatFunc::from_int(2));
    let words: [&[Gen]; 4] = [
        &[X, Theta, Y],
        &[Theta, Z, Theta, X],
        &[Y, Y, Theta, Z],
        &[Z, X, Theta, Y, Theta],
    ];
    let v = KVector::from_entries([(0, RatFunc::one()), (2, q(-1))]);
    for w in words {
        let mut direct = v.clone();
        for g in w.iter().rev() {
            direct = m.act(op(*g), &direct).unwrap();
        }
        let nf = normal_form1(&GenWord::letters(w));
        assert_eq!(m.act_element(&nf, &v).unwrap(), direct);
    }
}

#[test]
fn character_values() {
    let lam = &q(1) + &RatFunc::from_int(2);
    let chi = CharacterPM::new(1, lam.clone()).unwrap();
    let x = normal_form1(&GenWord::letters(&[Gen::X]));
    let z = normal_form1(&GenWord::letters(&[Gen::Z]));
    let xy = normal_form1(&GenWord::letters(&[Gen::X, Gen::Y]));
    assert_eq!(chi_eval(&Generic, &chi, &x).unwrap(), lam);
    assert!(chi_eval(&Generic, &chi, &z).unwrap().is_zero());
    assert!(chi_eval(&Generic, &chi, &xy).unwrap().is_one());
    let theta = normal_form1(&GenWord::letters(&[Gen::Theta]));
    assert_eq!(chi_eval(&Generic, &chi, &theta), Err(IndError::NotInDomain));
    let one = crate::pbw::Pbw1Element::one();
    let odd = CharacterPM::new(-1, lam).unwrap();
    assert!(chi_eval_extended(&Generic, &odd, &one, &one)
        .unwrap()
        .is_zero());
}

#[test]
fn weights() {
    assert!(inner_weight(&Generic, 0).is_one());
    assert_eq!(
        inner_weight(&Generic, 1),
        (&RatFunc::from_int(2) / &(&q(1) + &q(-1)))
    );
    assert_eq!(inner_weight(&Generic, -3), inner_weight(&Generic, 3));
    let d = AtQ::new(rat(2, 1)).unwrap();
    assert_eq!(inner_weight(&d, 1), GaussRat::from_frac(4, 5));
}

#[test]
fn special_points() {
    assert_eq!(special_point(&Generic, 1, &q(3), 64), Ok(Some((1, 3))));
    assert_eq!(special_point(&Generic, 1, &q(2), 64), Ok(None));
    assert_eq!(
        special_point(&Generic, -1, &RatFunc::from_int(-1), 64),
        Ok(Some((-1, 0)))
    );
    let d = AtQ::new(rat(2, 1)).unwrap();
    assert_eq!(
        special_point(&d, 1, &GaussRat::from_frac(1, 2), 64),
        Ok(Some((1, -1)))
    );
    assert_eq!(
        special_point(&d, -1, &GaussRat::from_frac(1, 2), 64),
        Ok(None)
    );
}

fn supports(c: &Classification<RatFunc>, parity: Parity, w: i64) -> Vec<Vec<i64>> {
    c.submodules
        .iter()
        .map(|s| s.support(parity, w).into_iter().collect())
        .collect()
}

#[test]
fn classify_q_cubed() {
    let c = classify(&Generic, 1, &q(3)).unwrap();
    assert_eq!(c.special, Some((1, 3)));
    let s = supports(&c, Parity::Even, 8);
    assert_eq!(s[1], vec![4, 6, 8]);
    assert_eq!(s[2], vec![-8, -6, -4]);
    assert_eq!(s[3], vec![-8, -6, -4, 4, 6, 8]);
    assert_eq!(s.len(), 5);
    let names: Vec<&str> = c
        .composition_series
        .iter()
        .map(|f| f.variant.name())
        .collect();
    assert_eq!(names, ["DiscretePlus", "DiscreteMinus", "FiniteDim"]);
    assert_eq!(
        c.composition_series[2].variant,
        SimpleVariant::FiniteDim { sigma: 1, n: 3 }
    );
    // The quotient has the three K-types -2, 0, 2.
    let all = SubmoduleDescriptor::new(SubmoduleKind::All, 0).support(Parity::Even, 8);
    let quotient: Vec<i64> = all
        .difference(&c.submodules[3].support(Parity::Even, 8))
        .copied()
        .collect();
    assert_eq!(quotient, vec![-2, 0, 2]);
}

#[test]
fn classify_other_cases() {
    let c = classify(&Generic, 1, &q(2)).unwrap();
    assert_eq!(c.submodules.len(), 2);
    assert_eq!(c.composition_series.len(), 1);
    let c = classify(&Generic, -1, &RatFunc::one()).unwrap();
    let s = supports(&c, Parity::Odd, 5);
    assert_eq!(
        s,
        vec![
            vec![],
            vec![1, 3, 5],
            vec![-5, -3, -1],
            vec![-5, -3, -1, 1, 3, 5]
        ]
    );
    let c = classify(&Generic, 1, &-q(-3)).unwrap();
    assert_eq!(c.special, Some((-1, -3)));
    assert_eq!(
        c.composition_series[0].variant,
        SimpleVariant::FiniteDim { sigma: -1, n: 3 }
    );
    assert_eq!(supports(&c, Parity::Even, 4)[1], vec![-2, 0, 2]);
}

#[test]
fn lattice_check_rejects_wrong_claims() {
    let m = generic(1, q(3));
    let wrong = [
        SubmoduleDescriptor::new(SubmoduleKind::Zero, 0),
        SubmoduleDescriptor::new(SubmoduleKind::All, 0),
    ];
    assert!(!lattice_matches(&m, &wrong, 10));
}

#[test]
fn intertwiner_dimensions() {
    let lam = &q(1) + &RatFunc::from_int(2);
    let inv = lam.inv().unwrap();
    let sp = intertwiners(&Generic, 1, &inv, 1, &lam, 12).unwrap();
    assert_eq!(sp.dimension, 1);
    let f = &sp.basis[0];
    assert!(f[&0].is_one());
    // f_{n+1} / f_{n-1} from the recursion, with n odd.
    for n in [-3i64, 1, 5] {
        let ratio = &f[&(n + 1)] / &f[&(n - 1)];
        let num = &(&lam * &q(n)) - &(&inv * &q(-n));
        let den = &(&inv * &q(n)) - &(&lam * &q(-n));
        assert_eq!(ratio, &num / &den);
    }
    assert_eq!(
        solve_intertwiners(&Generic, 1, &lam, 1, &lam, 12)
            .unwrap()
            .dimension,
        1
    );
    let up = solve_intertwiners(&Generic, 1, &q(-3), 1, &q(3), 20).unwrap();
    assert_eq!(up.dimension, 2);
    for f in &up.basis {
        assert!(f.keys().all(|n| n.abs() > 2));
    }
    let down = solve_intertwiners(&Generic, 1, &q(3), 1, &q(-3), 20).unwrap();
    assert_eq!(down.dimension, 1);
    assert_eq!(
        down.basis[0].keys().copied().collect::<Vec<_>>(),
        vec![-2, 0, 2]
    );
    // The solver finds the necessary conditions by itself.
    assert_eq!(
        solve_intertwiners(&Generic, 1, &lam, -1, &lam, 12)
            .unwrap()
            .dimension,
        0
    );
    assert_eq!(
        solve_intertwiners(&Generic, 1, &lam, 1, &q(2), 12)
            .unwrap()
            .dimension,
        0
    );
    assert_eq!(
        intertwiners(&Generic, 1, &lam, 1, &q(2), 12)
            .unwrap()
            .dimension,
        0
    );
    assert_eq!(
        solve_intertwiners(&Generic, 1, &q(-9), 1, &q(9), 10),
        Err(IndError::WindowTooSmall)
    );
}

#[test]
fn semisimple_endomorphisms() {
    let one = RatFunc::one();
    assert_eq!(
        solve_intertwiners(&Generic, -1, &one, -1, &one, 12)
            .unwrap()
            .dimension,
        2
    );
    assert_eq!(
        solve_intertwiners(&Generic, 1, &q(2), 1, &q(2), 12)
            .unwrap()
            .dimension,
        1
    );
}

#[test]
fn adjointness() {
    let lam = GaussRat::from_parts((3, 5), (4, 5));
    let r = adjointness_check(1, &lam, &rat(4, 1), 10).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert!(r.checked > 0);
    assert_eq!(
        adjointness_check(1, &GaussRat::from_int(4), &rat(4, 1), 10),
        Err(IndError::NotUnitaryCharacter)
    );
    let bad = adjointness_residuals(1, &GaussRat::from_int(4), &rat(4, 1), 10).unwrap();
    assert!(!bad.passed());
    assert!(bad.failures.iter().all(|(g, _, _)| *g != "theta"));
}

#[test]
fn simple_classes() {
    let two = rat(2, 1);
    let c = simple_classify(1, &GaussRat::i(), &two).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].unitary_type, Some(UnitaryType::Principal));
    let c = simple_classify(1, &GaussRat::from_frac(3, 4), &two).unwrap();
    assert_eq!(c[0].unitary_type, Some(UnitaryType::Complementary));
    let c = simple_classify(1, &GaussRat::from_frac(1, 3), &two).unwrap();
    assert!(!c[0].unitarizable);
    let c = simple_classify(1, &GaussRat::from_int(2), &two).unwrap();
    assert_eq!(c.len(), 3);
    assert!(c.iter().all(|s| s.unitarizable));
    assert_eq!(c[2].unitary_type, Some(UnitaryType::TrivialLike));
    // |lambda| > 1 is replaced by its inverse; on the circle the upper half wins.
    let c = simple_classify(1, &GaussRat::from_int(3), &two).unwrap();
    assert_eq!(
        c[0].variant,
        SimpleVariant::Principal {
            eps: 1,
            lambda: GaussRat::from_frac(1, 3)
        }
    );
    let c = simple_classify(-1, &-GaussRat::i(), &two).unwrap();
    assert_eq!(
        c[0].variant,
        SimpleVariant::Principal {
            eps: -1,
            lambda: GaussRat::i()
        }
    );
}
