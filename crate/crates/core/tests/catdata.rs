use skein_core::catdata::additive::Additive;
use skein_core::catdata::builders::{
    build_dual_numbers, build_graded_vect, build_graded_z3_zeta, build_trivial,
};
use skein_core::catdata::format::{from_json, to_json};
use skein_core::catdata::supermod::build_exterior_smod;
use skein_core::catdata::{
    dual_mor, ideal_closure, retract_witness, sum_witness, validate_category, validate_objects,
    Pivotal,
};
use skein_core::exactla::Field;
use skein_core::Error;

fn f7() -> Field {
    Field::prime(7).unwrap()
}

#[test]
fn trivial_category_validates() {
    let r = validate_category(&build_trivial(Field::Rational)).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn graded_z3_with_zeta_validates() {
    for p in [7, 13] {
        let c = build_graded_z3_zeta(Field::prime(p).unwrap()).unwrap();
        let r = validate_category(&c).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn graded_z2_with_sign_validates() {
    let q = Field::Rational;
    let c = build_graded_vect(2, &[q.one(), q.int(-1)]).unwrap();
    assert!(validate_category(&c).unwrap().passed());
}

#[test]
fn non_character_dimensions_break_monoidality_of_duality() {
    let f = f7();
    let c = build_graded_vect(3, &[f.one(), f.int(3), f.int(3)]).unwrap();
    let r = validate_category(&c).unwrap();
    let fail = r.failure.expect("must fail");
    assert!(fail.axiom.starts_with("duality monoidal"), "{}", fail.axiom);
}

#[test]
fn perturbed_composition_reports_associativity() {
    let f = f7();
    let mut c = build_dual_numbers(f);
    assert!(validate_category(&c).unwrap().passed());
    // 1·x := 1 + x
    c.compose[0][2] = f.one();
    let r = validate_category(&c).unwrap();
    assert_eq!(r.failure.unwrap().axiom, "composition associativity");
}

#[test]
fn non_invertible_dimension_is_rejected() {
    let f = f7();
    assert!(build_graded_vect(2, &[f.one(), f.zero()]).is_err());
}

#[test]
fn shape_errors_are_distinct_from_axiom_failures() {
    let mut c = build_trivial(f7());
    c.id_vec[0].push(f7().one());
    assert!(matches!(validate_category(&c), Err(Error::Shape(_))));
}

#[test]
fn dual_mor_examples() {
    let f = f7();
    let c = build_graded_z3_zeta(f).unwrap();
    for x in 0..3 {
        let id = c.identity(&x);
        assert_eq!(dual_mor(&c, &id), c.identity(&c.dual_obj(&x)));
    }
    let a = f.int(5);
    let g = c.scale_mor(&a, &c.identity(&1));
    let d = dual_mor(&c, &g);
    assert_eq!(d.src, 2);
    assert_eq!(d.coeffs, vec![a]);
}

#[test]
fn dual_mor_is_contravariant_on_modules() {
    let (cat, objs) = build_exterior_smod(Field::prime(101).unwrap(), &["a", "b"], vec![]).unwrap();
    let (lam, pilam) = (objs[2], objs[3]);
    for f in cat.hom_basis(&lam, &pilam) {
        for g in cat.hom_basis(&pilam, &lam) {
            let lhs = dual_mor(&cat, &cat.compose(&g, &f));
            let rhs = cat.compose(&dual_mor(&cat, &f), &dual_mor(&cat, &g));
            assert!(cat.mor_eq(&lhs, &rhs));
        }
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for c in [
        build_trivial(Field::Rational),
        build_graded_z3_zeta(f7()).unwrap(),
        build_dual_numbers(f7()),
    ] {
        let s = to_json(&c);
        let back = from_json(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_json(&back), s);
    }
}

#[test]
fn truncated_json_reports_position() {
    let s = to_json(&build_graded_z3_zeta(f7()).unwrap());
    let cut = &s[..s.len() / 2];
    match from_json(cut) {
        Err(Error::Parse { line, .. }) => assert!(line > 1),
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn ideal_closure_examples() {
    let c = build_graded_z3_zeta(f7()).unwrap();
    assert_eq!(ideal_closure(&c, &[0, 1, 2], &[0]), vec![0, 1, 2]);
    assert_eq!(ideal_closure(&c, &[0, 1, 2], &[0, 1, 2]), vec![0, 1, 2]);

    let (cat, objs) = build_exterior_smod(Field::prime(101).unwrap(), &["a", "b"], vec![]).unwrap();
    let closed = ideal_closure(&cat, &objs, &[objs[2]]);
    assert_eq!(closed, vec![objs[2], objs[3]]);
    assert_eq!(ideal_closure(&cat, &objs, &closed), closed);
}

#[test]
fn retract_witness_examples() {
    let c = build_graded_z3_zeta(f7()).unwrap();
    assert!(retract_witness(&c, &1, &1).is_some());
    assert!(retract_witness(&c, &0, &1).is_none());

    let add = Additive::new(&c);
    let x = vec![1usize];
    let xx = vec![1usize, 1];
    let (iota, pi) = retract_witness(&add, &x, &xx).expect("summand");
    assert!(add.mor_eq(&add.compose(&pi, &iota), &add.identity(&x)));
    let w = sum_witness(&add, &xx, std::slice::from_ref(&x)).expect("sum of copies");
    assert!(w.verify(&add));
    assert_eq!(w.legs.len(), 2);
}

#[test]
fn additive_envelope_satisfies_axioms() {
    let c = build_graded_z3_zeta(f7()).unwrap();
    let add = Additive::new(&c);
    let objs = vec![vec![0], vec![1], vec![1, 2]];
    let r = validate_objects(&add, &objs);
    assert!(r.passed(), "{r}");
}
