use proptest::prelude::*;

use skein_core::catdata::builders::build_graded_vect;
use skein_core::catdata::format::{from_json, to_json};
use skein_core::catdata::supermod::build_exterior_smod;
use skein_core::catdata::{validate_category, CategoryDatum, Pivotal};
use skein_core::coend::DEFAULT_BUDGET;
use skein_core::diagram::Orientation;
use skein_core::exactla::{kernel_basis, rref, Field, Matrix, QuotientSpace, Scalar, Subspace};
use skein_core::skein::{
    disjoint_union, MTraceSide, SlotRef, SurfaceSkein, SurfaceSpec, TraceContext,
};

fn f13() -> Field {
    Field::prime(13).unwrap()
}

/// `Vect_{ℤ/n}` over F₁₃ with pivotal character `k ↦ r^k`, `r = 2^{12e/n}`.
fn graded(n: usize, e: usize) -> CategoryDatum {
    let k = f13();
    let r = k.int(2).pow((12 / n * e) as i64);
    let dims: Vec<Scalar> = (0..n).map(|i| r.pow(i as i64)).collect();
    build_graded_vect(n, &dims).unwrap()
}

fn graded_strategy() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![1usize, 2, 3, 4, 6]).prop_flat_map(|n| (Just(n), 0..n))
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-6i64..7, r * c).prop_map(move |e| Matrix::from_ints(f13(), r, c, &e))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_nullity(m in matrix_strategy()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
        let (r, rank, _) = rref(&m);
        prop_assert_eq!(rref(&r).0, r);
        prop_assert_eq!(rank, m.rank());
    }

    #[test]
    fn quotient_projection_is_linear(m in matrix_strategy(), a in -6i64..7) {
        let k = f13();
        let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let q = QuotientSpace::new(Subspace::span(k, m.cols(), &rows));
        let x: Vec<Scalar> = (0..m.cols()).map(|i| k.int(i as i64 + 1)).collect();
        let y: Vec<Scalar> = (0..m.cols()).map(|i| k.int(2 * i as i64 - 3)).collect();
        let s = k.int(a);
        let comb: Vec<Scalar> = x.iter().zip(&y).map(|(u, v)| &(&s * u) + v).collect();
        let lhs = q.project(&comb);
        let rhs: Vec<Scalar> = q.project(&x).iter().zip(q.project(&y)).map(|(u, v)| &(&s * u) + &v).collect();
        prop_assert_eq!(lhs, rhs);
        for r in &rows {
            prop_assert!(q.project(r).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn graded_data_validate_and_round_trip((n, e) in graded_strategy()) {
        let c = graded(n, e);
        prop_assert!(validate_category(&c).unwrap().passed());
        let text = to_json(&c);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn trace_space_dualities((n, e) in graded_strategy()) {
        let c = graded(n, e);
        let all = c.all_objects();
        let t = TraceContext::new(&c, &all, &all, DEFAULT_BUDGET).unwrap().complete(true);
        let annulus = t.annulus().dim();
        prop_assert_eq!(t.trace_space().dim(), annulus);
        prop_assert_eq!(t.mtrace_space(MTraceSide::Right).unwrap().dim(), t.disc_closed().unwrap().dim());
        prop_assert_eq!(t.mtrace_space(MTraceSide::Left).unwrap().dim(), t.disc_closed().unwrap().dim());
        prop_assert_eq!(t.mtrace_space(MTraceSide::TwoSided).unwrap().dim(), t.sphere().unwrap().dim());
        for side in [MTraceSide::Left, MTraceSide::Right, MTraceSide::TwoSided] {
            for functional in t.mtrace_space(side).unwrap().basis_vectors() {
                prop_assert!(t.check_partial_trace(&functional, side).unwrap());
            }
        }
        let certificate = t.loop_certificate(&all).unwrap();
        prop_assert!(certificate.passed());
        prop_assert!(certificate.rank <= annulus);
    }

    #[test]
    fn loop_class_is_linear((n, e) in graded_strategy(), a in -6i64..7, b in -6i64..7) {
        let c = graded(n, e);
        let all = c.all_objects();
        let t = TraceContext::new(&c, &all, &all, DEFAULT_BUDGET).unwrap();
        let x = n - 1;
        let id = c.identity(&x);
        let (sa, sb) = (c.field().int(a), c.field().int(b));
        let combo = c.lin(&x, &x, &[(sa.clone(), &id), (sb.clone(), &id)]);
        let lhs = t.loop_class(&x, &combo).unwrap();
        let one = t.loop_class(&x, &id).unwrap();
        let rhs: Vec<Scalar> = one.iter().map(|v| &(&sa * v) + &(&sb * v)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn surface_invariants((n, e) in graded_strategy()) {
        let c = graded(n, e);
        let all = c.all_objects();
        let unit = [c.unit];
        let build = |spec: SurfaceSpec<usize>| SurfaceSkein::build(&c, spec, DEFAULT_BUDGET).unwrap();
        let annulus = build(SurfaceSpec::new(0, vec![vec![], vec![]], &all, &unit, &unit));
        let t = TraceContext::new(&c, &all, &all, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(annulus.dim(), t.annulus().dim());
        let torus = build(SurfaceSpec::new(1, vec![], &all, &all, &all)).dim();
        let mut swapped = SurfaceSpec::new(1, vec![], &all, &unit, &all);
        swapped.cut_schedule = Some(vec![1, 0]);
        prop_assert_eq!(build(swapped).dim(), torus);
        prop_assert!(torus >= t.loop_certificate(&all).unwrap().rank);
        let union = disjoint_union(&annulus.presentation, &annulus.presentation).unwrap();
        prop_assert_eq!(union.dim(), annulus.dim() * annulus.dim());
    }

    #[test]
    fn insertion_respects_composition((n, e) in graded_strategy(), a in 1i64..13, b in 1i64..13) {
        let c = graded(n, e);
        let all = c.all_objects();
        let x = n - 1;
        let boundary = vec![vec![(x, Orientation::Up), (c.dual[x], Orientation::Up)], vec![]];
        let s = SurfaceSkein::build(&c, SurfaceSpec::new(0, boundary, &all, &all, &all), DEFAULT_BUDGET).unwrap();
        let at = SlotRef { circle: 0, pos: 1 };
        let y = c.dual[x];
        let f = c.scale_mor(&c.field().int(a), &c.identity(&y));
        let g = c.scale_mor(&c.field().int(b), &c.identity(&y));
        let (mid, mf) = s.on_morphism(at, &f, DEFAULT_BUDGET).unwrap();
        let (_, mg) = mid.on_morphism(at, &g, DEFAULT_BUDGET).unwrap();
        let (_, mgf) = s.on_morphism(at, &c.compose(&g, &f), DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(mg.mul(&mf), mgf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn exterior_loop_class_is_linear(a in -6i64..7, b in -6i64..7) {
        let (e, objs) = build_exterior_smod(f13(), &["a", "b"], Vec::new()).unwrap();
        let lam = objs[2];
        let t = TraceContext::new(&e, &objs, &objs, DEFAULT_BUDGET).unwrap();
        let basis = e.hom_basis(&lam, &lam);
        let (sa, sb) = (e.field().int(a), e.field().int(b));
        let combo = e.lin(&lam, &lam, &[(sa.clone(), &basis[0]), (sb.clone(), &basis[1])]);
        let lhs = t.loop_class(&lam, &combo).unwrap();
        let (u, v) = (t.loop_class(&lam, &basis[0]).unwrap(), t.loop_class(&lam, &basis[1]).unwrap());
        let rhs: Vec<Scalar> = u.iter().zip(&v).map(|(p, q)| &(&sa * p) + &(&sb * q)).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
