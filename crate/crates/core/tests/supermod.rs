use skein_core::catdata::supermod::{build_exterior_smod, module_x, SuperModCategory};
use skein_core::catdata::{validate_objects, Pivotal};
use skein_core::exactla::Field;
use skein_core::Error;

fn field() -> Field {
    Field::prime(10007).unwrap()
}

#[test]
fn hom_dimensions_over_two_generators() {
    let (cat, objs) = build_exterior_smod(field(), &["a", "b"], vec![]).unwrap();
    let [one, pi1, lam, pilam] = objs[..] else {
        panic!()
    };
    // even endomorphisms of Λ are right multiplications by even elements
    assert_eq!(cat.hom_dim(&lam, &lam), 2);
    assert_eq!(cat.hom_dim(&lam, &pilam), 2);
    assert_eq!(cat.hom_dim(&lam, &one), 1);
    assert_eq!(cat.hom_dim(&one, &lam), 1);
    assert_eq!(cat.hom_dim(&lam, &pi1), 0);
    assert_eq!(cat.hom_dim(&pilam, &pi1), 1);
    assert_eq!(cat.hom_dim(&one, &pi1), 0);
    assert_eq!(cat.tensor_obj(&lam, &pi1), pilam);
}

#[test]
fn standard_objects_satisfy_axioms() {
    let (cat, objs) = build_exterior_smod(field(), &["a", "b"], vec![]).unwrap();
    let r = validate_objects(&cat, &objs);
    assert!(r.passed(), "{r}");
}

#[test]
fn superdimension_of_free_module_vanishes() {
    let (cat, objs) = build_exterior_smod(field(), &["a", "b"], vec![]).unwrap();
    let lam = objs[2];
    let d = cat.compose(&cat.ev_tilde(&lam), &cat.coev(&lam));
    assert!(cat.is_zero_mor(&d));
}

#[test]
fn x_modules_are_valid() {
    let f = Field::prime(7).unwrap();
    let cat = SuperModCategory::new(f, &["a", "b", "c"]);
    for (l, m) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let x = module_x(&cat, &f.int(l), &f.int(m)).unwrap();
        let id = cat.add_module(&format!("X({l},{m})"), x).unwrap();
        assert_eq!(cat.hom_dim(&cat.unit(), &id), 1);
    }
}

#[test]
fn free_module_list_is_not_tensor_complete() {
    let (cat, objs) = build_exterior_smod(field(), &["a", "b"], vec![]).unwrap();
    let err = cat.to_datum("ext", &objs).unwrap_err();
    assert!(matches!(err, Error::NotTensorComplete { .. }), "{err}");
}

#[test]
fn plain_super_vector_spaces_give_a_datum() {
    let (cat, objs) = build_exterior_smod(field(), &[], vec![]).unwrap();
    let d = cat.to_datum("svect", &objs).unwrap();
    assert!(skein_core::catdata::validate_category(&d).unwrap().passed());
}
