use proptest::prelude::*;
use rand::Rng;

use super::*;
use crate::coeffring::{int, rat, Element, FreeModule, LinearMap, Poly, Ring};
use crate::gen;
use crate::linalg;
use crate::structures::{dn, PreLieAlgebraFD, PreLieRinehart};

fn perturbed_d1() -> PreLieRinehart {
    let mut a = dn(&Ring::polynomial(&["x"]));
    a.product[0][0] = a.element(&["x"]).unwrap();
    a
}

fn one_dim_idempotent() -> PreLieRinehart {
    let mut g = PreLieAlgebraFD::zero(1);
    g.product[0][0] = vec![int(1)];
    gen::field_algebra(&g)
}

#[test]
fn representation_examples() {
    let mut rng = gen::rng(3);
    for _ in 0..20 {
        let alg = gen::random_prelie_rinehart(&mut rng);
        assert!(Representation::left_regular(&alg).check().passed());
        assert!(Representation::anchor(&alg, 2).check().passed());
        assert!(gen::random_representation(&mut rng, &alg).check().passed());
        let field = gen::random_field_prelie(&mut rng);
        assert!(Representation::regular(&field).check().passed());
    }
    assert!(Representation::regular(&dn(&Ring::polynomial(&["x", "y"]))).check().passed());
    // R is not A-linear in its index once products have non-constant coefficients.
    let r = Representation::regular(&perturbed_d1()).check();
    assert_eq!(r.first_failure().unwrap().id, "mu_condition");
    let alg = dn(&Ring::polynomial(&["x1", "x2"]));
    let mut alg = alg;
    alg.product[1][1] = alg.element(&["0", "1"]).unwrap();
    let mut rep = Representation::regular(&alg);
    rep.mu[0] = rep.mu[0].add(&LinearMap::identity(alg.ring(), 2));
    let r = rep.check();
    assert!(!r.passed());
    assert_eq!(r.first_failure().unwrap().id, "mu_condition");
}

#[test]
fn coboundary_of_identity_is_the_product() {
    let mut rng = gen::rng(4);
    for _ in 0..10 {
        let alg = gen::random_prelie_rinehart(&mut rng);
        let rep = Representation::regular(&alg);
        let n = alg.rank();
        let id = Cochain::from_fn(ComplexKind::Prelie, 1, alg.ring(), n, n, |t| alg.basis(t[0])).unwrap();
        let d = prelie_coboundary(&id, &rep).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(d.on_basis(&[i, j]), alg.product[i][j]);
            }
        }
        let z = Cochain::zero(ComplexKind::Prelie, 2, alg.ring(), n, n).unwrap();
        assert!(prelie_coboundary(&z, &rep).unwrap().is_zero());
    }
    for a in [one_dim_idempotent(), dn(&Ring::polynomial(&["x"]))] {
        let rep = Representation::regular(&a);
        let phi = Cochain::from_fn(ComplexKind::Prelie, 1, a.ring(), 1, 1, |_| a.basis(0)).unwrap();
        assert_eq!(prelie_coboundary(&phi, &rep).unwrap().on_basis(&[0, 0]), a.product[0][0]);
    }
}

#[test]
fn lie_degree_zero() {
    let alg = perturbed_d1();
    let rep = Representation::regular(&alg).lie_part();
    let u = alg.element(&["x^2"]).unwrap();
    let w = Cochain::from_values(ComplexKind::Lie, 0, alg.ring(), 1, 1, vec![(vec![], u.clone())]).unwrap();
    let d = lie_coboundary(&w, &rep).unwrap();
    assert_eq!(d.on_basis(&[0]), rep.rho[0].apply(&u));
    assert!(prelie_coboundary(
        &Cochain::zero(ComplexKind::Lie, 1, alg.ring(), 1, 1).unwrap(),
        &Representation::regular(&alg)
    )
    .is_err());
}

#[test]
fn induced_representation() {
    let alg = one_dim_idempotent();
    let rep = Representation::regular(&alg);
    let c1 = induced_rep_on_c1(&rep).unwrap();
    assert!(c1.check().passed());
    // ϱ(e)(id)(e) = e·e + e·e − e·e
    let id = map_to_c1(&LinearMap::identity(alg.ring(), 1));
    let out = c1_to_map(&rep, &c1.rho[0].apply(&id));
    assert_eq!(out.column(0), alg.product[0][0]);
    assert!(induced_rep_on_c1(&Representation::regular(&perturbed_d1())).is_err());
    let d1 = perturbed_d1();
    let left = Representation::left_regular(&d1);
    let c1 = induced_rep_on_c1(&left).unwrap();
    let id = map_to_c1(&LinearMap::identity(d1.ring(), 1));
    // μ = 0: ϱ(e)(id)(e) = e·e − e·e
    assert!(c1_to_map(&left, &c1.rho[0].apply(&id)).is_zero());

    let mut rng = gen::rng(8);
    for _ in 0..15 {
        let a = gen::random_prelie_rinehart(&mut rng);
        let r = gen::random_representation(&mut rng, &a);
        assert!(induced_rep_on_c1(&r).unwrap().check().passed());
    }
}

#[test]
fn currying_round_trip_and_chain_map() {
    let mut rng = gen::rng(12);
    for _ in 0..8 {
        let alg = gen::random_prelie_rinehart(&mut rng);
        let rep = gen::random_representation(&mut rng, &alg);
        let c1 = induced_rep_on_c1(&rep).unwrap();
        let degree = rng.gen_range(0..=2);
        let psi = gen::random_cochain(&mut rng, ComplexKind::Lie, degree, alg.ring(), alg.rank(), c1.target_rank(), 1);
        let h = complex_iso_h(&psi, &rep).unwrap();
        assert_eq!(complex_iso_h_inverse(&h, &rep).unwrap(), psi);
        let lhs = complex_iso_h(&lie_coboundary(&psi, &c1).unwrap(), &rep).unwrap();
        assert_eq!(lhs, prelie_coboundary(&h, &rep).unwrap());
    }
}

#[test]
fn field_case_dimensions() {
    let alg = one_dim_idempotent();
    let rep = Representation::regular(&alg);
    // δ₁ on C¹ ≅ ℚ: φ(e)=c e gives δφ(e,e) = c e; C³ is zero since ∧²E = 0.
    let d1 = vec![vec![int(1)]];
    assert_eq!(coboundary_matrix(RepRef::Prelie(&rep), 1).unwrap(), d1);
    assert!(coboundary_matrix(RepRef::Prelie(&rep), 2).unwrap().is_empty());
    let expected = vec![1 - linalg::rank(&d1), 1 - linalg::rank(&d1)];
    assert_eq!(cohomology_dims_field(RepRef::Prelie(&rep), 2).unwrap(), expected);
    assert_eq!(expected, vec![0, 0]);

    let abelian = gen::field_algebra(&PreLieAlgebraFD::zero(2));
    let triv = Representation::anchor(&abelian, 1);
    // dim Cⁿ = C(2, n−1)·2·1
    assert_eq!(cohomology_dims_field(RepRef::Prelie(&triv), 3).unwrap(), vec![2, 4, 2]);
    let empty = Representation::anchor(&abelian, 0);
    assert_eq!(cohomology_dims_field(RepRef::Prelie(&empty), 3).unwrap(), vec![0, 0, 0]);
    assert!(matches!(
        cohomology_dims_field(RepRef::Prelie(&Representation::regular(&perturbed_d1())), 2),
        Err(crate::Error::NotFieldCase(_))
    ));
}

#[test]
fn solver_and_cocycle_check() {
    let mut rng = gen::rng(21);
    for _ in 0..10 {
        let alg = gen::random_field_prelie(&mut rng);
        let rep = gen::random_representation(&mut rng, &alg);
        let b = gen::random_cochain(&mut rng, ComplexKind::Prelie, 1, alg.ring(), alg.rank(), rep.target_rank(), 0);
        let c = prelie_coboundary(&b, &rep).unwrap();
        let pre = coboundary_solve_field(&c, RepRef::Prelie(&rep)).unwrap().expect("exact");
        assert_eq!(prelie_coboundary(&pre, &rep).unwrap(), c);
        assert!(cocycle_check(&c, RepRef::Prelie(&rep)).unwrap().passed());
        let z = Cochain::zero(ComplexKind::Prelie, 2, alg.ring(), alg.rank(), rep.target_rank()).unwrap();
        assert!(coboundary_solve_field(&z, RepRef::Prelie(&rep)).unwrap().is_some());
    }
    // Rank-2 field case: ∂·(x∂) = ∂, (x∂)·(x∂) = x∂ with (L,R), and a 2-cochain that is not closed.
    let mut g = PreLieAlgebraFD::zero(2);
    g.product[0][1] = vec![int(1), int(0)];
    g.product[1][1] = vec![int(0), int(1)];
    let alg = gen::field_algebra(&g);
    let rep = Representation::regular(&alg);
    let c = Cochain::from_values(ComplexKind::Prelie, 2, alg.ring(), 2, 2, vec![(vec![0, 0], alg.basis(0))]).unwrap();
    let d = prelie_coboundary(&c, &rep).unwrap();
    assert!(!d.is_zero());
    let report = cocycle_check(&c, RepRef::Prelie(&rep)).unwrap();
    assert!(!report.passed());
    assert!(coboundary_solve_field(&c, RepRef::Prelie(&rep)).unwrap().is_none());
}

fn random_setup(seed: u64) -> (PreLieRinehart, Representation, gen::SeededRng) {
    let mut rng = gen::rng(seed);
    let alg = gen::random_prelie_rinehart(&mut rng);
    let rep = gen::random_representation(&mut rng, &alg);
    (alg, rep, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn delta_squared_vanishes(seed in any::<u64>(), degree in 1usize..=2) {
        let (alg, rep, mut rng) = random_setup(seed);
        let phi = gen::random_cochain(&mut rng, ComplexKind::Prelie, degree, alg.ring(), alg.rank(), rep.target_rank(), 2);
        let dd = prelie_coboundary(&prelie_coboundary(&phi, &rep).unwrap(), &rep).unwrap();
        prop_assert!(dd.is_zero());
        let lie = rep.lie_part();
        let w = gen::random_cochain(&mut rng, ComplexKind::Lie, degree, alg.ring(), alg.rank(), rep.target_rank(), 2);
        prop_assert!(lie_coboundary(&lie_coboundary(&w, &lie).unwrap(), &lie).unwrap().is_zero());
    }

    #[test]
    fn coboundary_is_multilinear_and_alternating(seed in any::<u64>()) {
        let (alg, rep, mut rng) = random_setup(seed);
        let phi = gen::random_cochain(&mut rng, ComplexKind::Prelie, 2, alg.ring(), alg.rank(), rep.target_rank(), 1);
        let table = prelie_coboundary(&phi, &rep).unwrap();
        let args: Vec<Element> = (0..3).map(|_| gen::random_element(&mut rng, alg.ring(), alg.rank(), 1)).collect();
        let a = gen::random_monomial(&mut rng, alg.ring(), 2);
        let direct = prelie_coboundary_eval(&phi, &rep, &args);
        prop_assert_eq!(&direct, &table.eval(&args));
        for slot in 0..3 {
            let mut scaled = args.clone();
            scaled[slot] = scaled[slot].scale(&a);
            prop_assert_eq!(prelie_coboundary_eval(&phi, &rep, &scaled), direct.scale(&a));
        }
        let swapped = vec![args[1].clone(), args[0].clone(), args[2].clone()];
        prop_assert_eq!(prelie_coboundary_eval(&phi, &rep, &swapped), direct.neg());
    }
}

#[test]
fn rank_zero_target() {
    let alg = gen::field_algebra(&PreLieAlgebraFD::zero(1));
    let rep = Representation::new(
        alg.clone(),
        FreeModule::new(alg.ring(), vec![]).unwrap(),
        vec![crate::coeffring::DerivationPair::zero(alg.ring(), 0)],
        vec![LinearMap::zero(alg.ring(), 0, 0)],
    )
    .unwrap();
    assert_eq!(cohomology_dims_field(RepRef::Prelie(&rep), 2).unwrap(), vec![0, 0]);
    let _ = (rat(1, 2), Poly::zero(alg.ring()));
}
