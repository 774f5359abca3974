use skein_core::catdata::builders::{build_graded_z3_zeta, build_trivial};
use skein_core::catdata::supermod::build_exterior_smod;
use skein_core::catdata::{CategoryDatum, MorphismVec, Pivotal};
use skein_core::diagram::{
    dims, evaluate, ptr_l, ptr_r, CapFlavor, Cell, CupFlavor, DiagramWord, StrandType,
};
use skein_core::exactla::{Field, Scalar};
use skein_core::Error;

type W = DiagramWord<usize, MorphismVec>;

fn z3() -> (CategoryDatum, Scalar) {
    let f = Field::prime(7).unwrap();
    let c = build_graded_z3_zeta(f).unwrap();
    (c, f.int(2))
}

#[test]
fn single_box_evaluates_to_its_morphism() {
    let (c, zeta) = z3();
    let f = c.scale_mor(&zeta, &c.identity(&1));
    let w: W = DiagramWord {
        source: vec![StrandType::up(1)],
        target: vec![StrandType::up(1)],
        layers: vec![vec![Cell::Box {
            src: vec![StrandType::up(1)],
            dst: vec![StrandType::up(1)],
            mor: f.clone(),
        }]],
    };
    assert_eq!(evaluate(&c, &w).unwrap(), f);
}

#[test]
fn zigzag_is_identity() {
    let (c, _) = z3();
    for x in 0..3 {
        let w: W = DiagramWord {
            source: vec![StrandType::up(x)],
            target: vec![StrandType::up(x)],
            layers: vec![
                vec![
                    Cell::Cap {
                        object: x,
                        flavor: CapFlavor::Coev,
                    },
                    Cell::Identity(StrandType::up(x)),
                ],
                vec![
                    Cell::Identity(StrandType::up(x)),
                    Cell::Cup {
                        object: x,
                        flavor: CupFlavor::Ev,
                    },
                ],
            ],
        };
        assert_eq!(evaluate(&c, &w).unwrap(), c.identity(&x));
    }
}

#[test]
fn closed_loop_gives_right_dimension() {
    let (c, zeta) = z3();
    let w: W = DiagramWord {
        source: vec![],
        target: vec![],
        layers: vec![
            vec![Cell::Cap {
                object: 1,
                flavor: CapFlavor::Coev,
            }],
            vec![Cell::Cup {
                object: 1,
                flavor: CupFlavor::EvTilde,
            }],
        ],
    };
    assert_eq!(evaluate(&c, &w).unwrap().coeffs, vec![zeta]);
}

#[test]
fn chaining_and_box_errors() {
    let (c, _) = z3();
    let bad: W = DiagramWord {
        source: vec![StrandType::up(1)],
        target: vec![StrandType::up(1)],
        layers: vec![vec![Cell::Identity(StrandType::up(2))]],
    };
    assert!(matches!(evaluate(&c, &bad), Err(Error::Chain(_))));
    let bad_box: W = DiagramWord {
        source: vec![StrandType::up(1)],
        target: vec![StrandType::up(1)],
        layers: vec![vec![Cell::Box {
            src: vec![StrandType::up(1)],
            dst: vec![StrandType::up(1)],
            mor: c.identity(&2),
        }]],
    };
    assert!(matches!(evaluate(&c, &bad_box), Err(Error::BoxMismatch(_))));
}

#[test]
fn partial_traces_of_identities() {
    let (c, zeta) = z3();
    let zinv = zeta.inv().unwrap();
    let id12 = c.identity(&c.tensor_obj(&1, &2));
    let l = ptr_l(&c, &id12, &1, &2, &2).unwrap();
    assert_eq!(l, c.scale_mor(&zinv, &c.identity(&2)));
    let id21 = c.identity(&c.tensor_obj(&2, &1));
    let r = ptr_r(&c, &id21, &1, &2, &2).unwrap();
    assert_eq!(r, c.scale_mor(&zeta, &c.identity(&2)));
    for v in 0..3 {
        let (dl, dr) = dims(&c, &v).unwrap();
        for w in 0..3 {
            let vw = c.tensor_obj(&v, &w);
            assert_eq!(
                ptr_l(&c, &c.identity(&vw), &v, &w, &w).unwrap(),
                c.scale_mor(&dl, &c.identity(&w))
            );
            let wv = c.tensor_obj(&w, &v);
            assert_eq!(
                ptr_r(&c, &c.identity(&wv), &v, &w, &w).unwrap(),
                c.scale_mor(&dr, &c.identity(&w))
            );
        }
    }
    // over the unit nothing happens
    let f = c.scale_mor(&zeta, &c.identity(&1));
    assert_eq!(ptr_l(&c, &f, &0, &1, &1).unwrap(), f);
    assert_eq!(ptr_r(&c, &f, &0, &1, &1).unwrap(), f);
    assert!(matches!(
        ptr_l(&c, &f, &1, &1, &1),
        Err(Error::Factorization(_))
    ));
}

#[test]
fn dims_examples() {
    let (c, zeta) = z3();
    let f = c.field;
    assert_eq!(dims(&c, &0).unwrap(), (f.one(), f.one()));
    assert_eq!(dims(&c, &1).unwrap(), (zeta.inv().unwrap(), zeta));
    let t = build_trivial(Field::Rational);
    assert_eq!(
        dims(&t, &0).unwrap(),
        (Field::Rational.one(), Field::Rational.one())
    );
    let (cat, objs) = build_exterior_smod(Field::prime(101).unwrap(), &["a", "b"], vec![]).unwrap();
    let z = Field::prime(101).unwrap().zero();
    assert_eq!(dims(&cat, &objs[2]).unwrap(), (z.clone(), z));
}

#[test]
fn ptr_r_composes_over_tensor_products() {
    let (c, zeta) = z3();
    for x in 0..3 {
        for v in 0..3 {
            for w in 0..3 {
                let xwv = c.tensor_obj(&c.tensor_obj(&x, &w), &v);
                let f = c.scale_mor(&zeta, &c.identity(&xwv));
                let xw = c.tensor_obj(&x, &w);
                let wv = c.tensor_obj(&w, &v);
                let once = ptr_r(&c, &f, &wv, &x, &x).unwrap();
                let twice = ptr_r(&c, &ptr_r(&c, &f, &v, &xw, &xw).unwrap(), &w, &x, &x).unwrap();
                assert_eq!(once, twice);
            }
        }
    }
}

#[test]
fn stacking_and_juxtaposition_are_monoidal() {
    let (c, zeta) = z3();
    let bx = |x: usize, s: &Scalar| -> W {
        DiagramWord {
            source: vec![StrandType::up(x)],
            target: vec![StrandType::up(x)],
            layers: vec![vec![Cell::Box {
                src: vec![StrandType::up(x)],
                dst: vec![StrandType::up(x)],
                mor: c.scale_mor(s, &c.identity(&x)),
            }]],
        }
    };
    let z2 = zeta.pow(2);
    let a = bx(1, &zeta);
    let b = bx(1, &z2);
    let stacked = a.stack_on(&b).unwrap();
    assert_eq!(
        evaluate(&c, &stacked).unwrap(),
        c.compose(&evaluate(&c, &a).unwrap(), &evaluate(&c, &b).unwrap())
    );
    let cap: W = DiagramWord {
        source: vec![],
        target: vec![StrandType::up(2), StrandType::down(2)],
        layers: vec![vec![Cell::Cap {
            object: 2,
            flavor: CapFlavor::Coev,
        }]],
    };
    let side = a.beside(&cap);
    assert_eq!(
        evaluate(&c, &side).unwrap(),
        c.tensor_mor(&evaluate(&c, &a).unwrap(), &evaluate(&c, &cap).unwrap())
    );
}

#[test]
fn box_slide_and_identity_layers_do_not_change_values() {
    let (c, zeta) = z3();
    for x in 0..3 {
        for y in 0..3 {
            let fx = c.scale_mor(&zeta, &c.identity(&x));
            let gy = c.scale_mor(&zeta.pow(2), &c.identity(&y));
            let bx = |o: usize, m: &MorphismVec| Cell::Box {
                src: vec![StrandType::up(o)],
                dst: vec![StrandType::up(o)],
                mor: m.clone(),
            };
            let id = |o: usize| Cell::Identity(StrandType::up(o));
            let strands = vec![StrandType::up(x), StrandType::up(y)];
            let words: Vec<W> = vec![
                DiagramWord {
                    source: strands.clone(),
                    target: strands.clone(),
                    layers: vec![vec![bx(x, &fx), bx(y, &gy)]],
                },
                DiagramWord {
                    source: strands.clone(),
                    target: strands.clone(),
                    layers: vec![vec![bx(x, &fx), id(y)], vec![id(x), bx(y, &gy)]],
                },
                DiagramWord {
                    source: strands.clone(),
                    target: strands.clone(),
                    layers: vec![vec![id(x), bx(y, &gy)], vec![bx(x, &fx), id(y)]],
                },
                DiagramWord {
                    source: strands.clone(),
                    target: strands.clone(),
                    layers: vec![
                        vec![id(x), id(y)],
                        vec![bx(x, &fx), id(y)],
                        vec![id(x), id(y)],
                        vec![id(x), bx(y, &gy)],
                    ],
                },
            ];
            let v0 = evaluate(&c, &words[0]).unwrap();
            for w in &words[1..] {
                assert_eq!(evaluate(&c, w).unwrap(), v0);
            }
        }
    }
}

#[test]
fn words_serialize_to_json() {
    let (c, _) = z3();
    let w: W = DiagramWord {
        source: vec![StrandType::up(1)],
        target: vec![StrandType::up(1)],
        layers: vec![vec![Cell::Box {
            src: vec![StrandType::up(1)],
            dst: vec![StrandType::up(1)],
            mor: c.identity(&1),
        }]],
    };
    let s = serde_json::to_string(&w).unwrap();
    let back: W = serde_json::from_str(&s).unwrap();
    assert_eq!(back, w);
}
