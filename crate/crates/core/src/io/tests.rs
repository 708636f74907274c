use super::*;
use crate::coeffring::Ring;
use crate::gen;
use crate::rmatrix::sl2_double_action;
use crate::structures::{dn, sl2_action};
use crate::twoalg::{crossed_to_strict, sub_adjacent_2, triple_to_skeletal};

fn round_trip(s: &Structure) {
    let text = render(s);
    let back = parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(&back, s);
    assert_eq!(render(&back), text);
}

#[test]
fn every_kind_round_trips() {
    let mut rng = gen::rng(41);
    round_trip(&Structure::PreLie(dn(&Ring::polynomial(&["x1", "x2"]))));
    round_trip(&Structure::PreLie(dn(&Ring::laurent(&["z"]))));
    for _ in 0..4 {
        let alg = gen::random_prelie_rinehart(&mut rng);
        let rep = gen::random_representation(&mut rng, &alg);
        round_trip(&Structure::PreLie(alg.clone()));
        round_trip(&Structure::Lie(alg.sub_adjacent()));
        round_trip(&Structure::Rep(AnyRep::Prelie(rep.clone())));
        round_trip(&Structure::Rep(AnyRep::Lie(rep.lie_part())));
        let c = gen::random_cochain(&mut rng, ComplexKind::Prelie, 2, rep.ring(), rep.rank(), rep.target_rank(), 2);
        round_trip(&Structure::Cochain(c.clone(), None));
        round_trip(&Structure::Cochain(c, Some(AnyRep::Prelie(rep.clone()))));
        let l = gen::random_cochain(&mut rng, ComplexKind::Lie, 2, rep.ring(), rep.rank(), rep.target_rank(), 1);
        round_trip(&Structure::Cochain(l, Some(AnyRep::Lie(rep.lie_part()))));
        round_trip(&Structure::Extension(gen::random_extension(&mut rng, None)));
        let cm = gen::random_crossed_module(&mut rng);
        round_trip(&Structure::CrossedModule(cm.clone()));
        round_trip(&Structure::CrossedExtension(gen::random_crossed_extension(&mut rng)));
        let x = crossed_to_strict(&cm).unwrap();
        round_trip(&Structure::PreLie2(x.clone()));
        round_trip(&Structure::Lie2(sub_adjacent_2(&x).unwrap()));
        let m3 = gen::random_cochain(&mut rng, ComplexKind::Prelie, 3, rep.ring(), rep.rank(), rep.target_rank(), 1);
        round_trip(&Structure::PreLie2(triple_to_skeletal(&rep, &m3).unwrap()));
    }
    let q = |n: i64| Rational::from_integer(n.into());
    round_trip(&Structure::RMatrix(RMatrix::sl2(q(1), q(-1), q(2)), sl2_double_action()));
    round_trip(&Structure::RMatrix(RMatrix::sl2(q(0), q(0), q(0)), sl2_action()));
}

#[test]
fn kind_tag_comes_first() {
    let text = render(&Structure::PreLie(dn(&Ring::polynomial(&["x1"]))));
    assert!(text.starts_with("{\n  \"kind\": \"prelie_rinehart\",\n  \"ring\""), "{text}");
    assert!(text.contains("\"d_x1\"") || text.contains("\"basis\""));
}

#[test]
fn bad_inputs_are_rejected() {
    let good = render(&Structure::PreLie(dn(&Ring::polynomial(&["x1", "x2"]))));
    let v: serde_json::Value = serde_json::from_str(&good).unwrap();
    let mutate = |f: &dyn Fn(&mut serde_json::Value)| {
        let mut w = v.clone();
        f(&mut w);
        parse(&w.to_string())
    };
    assert!(parse(&good).is_ok());
    assert!(parse("{").is_err());
    assert!(parse("[]").is_err());
    assert!(mutate(&|w| w["kind"] = "mystery".into()).is_err());
    assert!(mutate(&|w| w.as_object_mut().unwrap().remove::<str>("kind").map(|_| ()).unwrap()).is_err());
    assert!(mutate(&|w| w["anchor"][0][0] = "x1^".into()).is_err());
    assert!(mutate(&|w| w["anchor"][0][0] = "y".into()).is_err());
    assert!(mutate(&|w| w["anchor"][0][0] = "x1^-1".into()).is_err());
    assert!(mutate(&|w| w["ring"]["vars"][1] = "x1".into()).is_err());
    assert!(mutate(&|w| w["basis"][1] = w["basis"][0].clone()).is_err());
    assert!(mutate(&|w| w["product"] = serde_json::json!([[0, 5, ["1", "0"]]])).is_err());
    assert!(mutate(&|w| w["product"] = serde_json::json!([[0, 0, ["1"]]])).is_err());
    assert!(mutate(&|w| w["product"] = serde_json::json!([[0, 0, ["1", "0"]], [0, 0, ["1", "0"]]])).is_err());
    assert!(mutate(&|w| w["product"] = serde_json::json!([[0, 0, ["1", "0"]]])).is_ok());

    // nested objects must share the ring
    let mut rng = gen::rng(42);
    let x = gen::random_extension(&mut rng, None);
    let mut w: serde_json::Value = serde_json::from_str(&render(&Structure::Extension(x))).unwrap();
    w["omega"]["ring"]["vars"] = serde_json::json!(["q"]);
    w["omega"]["values"] = serde_json::json!([]);
    assert!(matches!(parse(&w.to_string()), Err(Error::RingMismatch(_))));

    // a cochain whose representation does not fit
    let alg = gen::random_prelie_rinehart(&mut rng);
    let rep = gen::random_representation(&mut rng, &alg);
    let c = Cochain::zero(ComplexKind::Lie, 2, rep.ring(), rep.rank(), rep.target_rank()).unwrap();
    let text = render(&Structure::Cochain(c, Some(AnyRep::Prelie(rep))));
    assert!(parse(&text).is_err());
}
