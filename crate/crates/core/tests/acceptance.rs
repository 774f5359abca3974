use std::time::{Duration, Instant};

use skein_core::catdata::additive::Additive;
use skein_core::catdata::builders::{build_graded_vect, build_graded_z3_zeta, build_trivial};
use skein_core::catdata::supermod::{build_exterior_smod, ModId, SuperModCategory};
use skein_core::catdata::{ideal_closure, CategoryDatum, Pivotal};
use skein_core::coend::{closure_invariance_check, DEFAULT_BUDGET};
use skein_core::diagram::{dims, Orientation};
use skein_core::exactla::{Field, Matrix, QuotientSpace, Scalar, Subspace};
use skein_core::skein::{
    disjoint_union, example59_pipeline, skein_nonprojective, MTraceSide, SlotRef, SurfaceSkein,
    SurfaceSpec, TraceContext,
};
use skein_core::Result;

struct Outcome {
    pass: bool,
    summary: String,
}

fn check(pass: bool, summary: String) -> Result<Outcome> {
    Ok(Outcome { pass, summary })
}

fn prime(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn exterior(field: Field) -> (SuperModCategory, Vec<ModId>) {
    build_exterior_smod(field, &["a", "b"], Vec::new()).unwrap()
}

fn surface_dim<C: Pivotal>(c: &C, spec: SurfaceSpec<C::Obj>) -> Result<usize> {
    Ok(SurfaceSkein::build(c, spec, DEFAULT_BUDGET)?.dim())
}

fn annulus_spec<O: Clone>(listed: &[O], s: &[O], t: &[O]) -> SurfaceSpec<O> {
    SurfaceSpec::new(0, vec![vec![], vec![]], listed, s, t)
}

fn criterion1(field: Field) -> Result<Outcome> {
    let c = build_graded_z3_zeta(field)?;
    let all = c.all_objects();
    let t = TraceContext::new(&c, &all, &all, DEFAULT_BUDGET)?.complete(true);
    let annulus = t.annulus().dim();
    let sphere = t.sphere()?.dim();
    let zeta = field.primitive_root_of_unity(3).unwrap();
    let (dl, dr) = dims(&c, &1)?;
    let pass = annulus == 3 && sphere == 0 && dl == zeta.inv().unwrap() && dr == zeta;
    check(pass, format!("{field}: annulus {annulus}, sphere {sphere}, dim_l X1 = {dl}, dim_r X1 = {dr}, zeta = {zeta}"))
}

fn criterion2() -> Result<Outcome> {
    let (e, objs) = exterior(prime(7));
    let proj = [objs[2], objs[3]];
    let t = TraceContext::new(&e, &objs, &proj, DEFAULT_BUDGET)?;
    let right = t.mtrace_space(MTraceSide::Right)?;
    let disc = t.disc_closed()?.dim();
    let identity =
        right.dim() == 1 && t.check_partial_trace(&right.basis_vectors()[0], MTraceSide::Right)?;
    let functional: Vec<String> = right
        .basis_vectors()
        .iter()
        .flatten()
        .map(Scalar::to_string)
        .collect();
    check(
        right.dim() == 1 && disc == 1 && identity,
        format!(
            "right m-traces {}, closed disc {disc}, partial-trace identity {identity}, functional [{}]",
            right.dim(),
            functional.join(" ")
        ),
    )
}

fn criterion3() -> Result<Outcome> {
    let k = prime(7);
    let samples: Vec<(Scalar, Scalar)> = [(0, 0), (1, 0), (0, 1), (1, 1)]
        .iter()
        .map(|&(a, b)| (k.int(a), k.int(b)))
        .collect();
    let r = example59_pipeline(k, &samples)?;
    let psi_ok = r.samples.iter().zip(&samples).all(|(s, (l, m))| {
        s.b0_dim == 1 && s.psi_ac == vec![vec![l.clone()]] && s.psi_bc == vec![vec![m.clone()]]
    });
    let traces: Vec<String> = r
        .traces
        .iter()
        .map(|row| {
            row.iter()
                .map(Scalar::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    check(
        r.passed() && psi_ok && r.rank == 4,
        format!(
            "B0 dims 1, psi ok {psi_ok}, traces [{}], rank {}, coend dim {}",
            traces.join("; "),
            r.rank,
            r.coend_dim
        ),
    )
}

/// `⊕_{g,h} Hom(g⊗h, h⊗g)` modulo dinaturality in both variables, assembled
/// directly from the structure-constant tables.
fn torus_oracle(c: &CategoryDatum) -> usize {
    let n = c.n();
    let hom = |a: usize, b: usize| c.hom_dims[a][b];
    let tensor = |a: usize, b: usize| c.tensor[a][b];
    let mut offsets = Vec::new();
    let mut total = 0;
    for g in 0..n {
        for h in 0..n {
            offsets.push(total);
            total += hom(tensor(g, h), tensor(h, g));
        }
    }
    let compose = |a: usize, b: usize, cc: usize, g: &[Scalar], f: &[Scalar]| -> Vec<Scalar> {
        let t = &c.compose[(a * n + b) * n + cc];
        let (hab, hac) = (hom(a, b), hom(a, cc));
        let mut out = vec![c.field.zero(); hac];
        for (gi, gv) in g.iter().enumerate() {
            for (fi, fv) in f.iter().enumerate() {
                for (k, o) in out.iter_mut().enumerate() {
                    *o = &*o + &(&(gv * fv) * &t[(gi * hab + fi) * hac + k]);
                }
            }
        }
        out
    };
    let tensor_mor =
        |i: usize, i2: usize, j: usize, j2: usize, f: &[Scalar], g: &[Scalar]| -> Vec<Scalar> {
            let t = &c.tensor_mor[((i * n + i2) * n + j) * n + j2];
            let (hjj, hout) = (hom(j, j2), hom(tensor(i, j), tensor(i2, j2)));
            let mut out = vec![c.field.zero(); hout];
            for (fi, fv) in f.iter().enumerate() {
                for (gi, gv) in g.iter().enumerate() {
                    for (k, o) in out.iter_mut().enumerate() {
                        *o = &*o + &(&(fv * gv) * &t[(fi * hjj + gi) * hout + k]);
                    }
                }
            }
            out
        };
    let unit_vec = |len: usize, k: usize| {
        let mut e = vec![c.field.zero(); len];
        e[k] = c.field.one();
        e
    };
    let slot = |g: usize, h: usize| offsets[g * n + h];
    let mut rels = Vec::new();
    let mut push = |plus: (usize, Vec<Scalar>), minus: (usize, Vec<Scalar>)| {
        let mut v = vec![c.field.zero(); total];
        for (k, x) in plus.1.iter().enumerate() {
            v[plus.0 + k] = &v[plus.0 + k] + x;
        }
        for (k, x) in minus.1.iter().enumerate() {
            v[minus.0 + k] = &v[minus.0 + k] - x;
        }
        rels.push(v);
    };
    for i in 0..n {
        for j in 0..n {
            for fk in 0..hom(i, j) {
                let f = unit_vec(hom(i, j), fk);
                for o in 0..n {
                    let id = &c.id_vec[o];
                    // first variable: Ψ : j⊗o → o⊗i; (id⊗f)∘Ψ at (j, o), Ψ∘(f⊗id) at (i, o)
                    let (src, dst) = (tensor(j, o), tensor(o, i));
                    for pk in 0..hom(src, dst) {
                        let psi = unit_vec(hom(src, dst), pk);
                        let post = tensor_mor(o, o, i, j, id, &f);
                        let pre = tensor_mor(i, j, o, o, &f, id);
                        push(
                            (slot(j, o), compose(src, dst, tensor(o, j), &post, &psi)),
                            (slot(i, o), compose(tensor(i, o), src, dst, &psi, &pre)),
                        );
                    }
                    // second variable: Ψ : o⊗j → i⊗o; (f⊗id)∘Ψ at (o, j), Ψ∘(id⊗f) at (o, i)
                    let (src, dst) = (tensor(o, j), tensor(i, o));
                    for pk in 0..hom(src, dst) {
                        let psi = unit_vec(hom(src, dst), pk);
                        let post = tensor_mor(i, j, o, o, &f, id);
                        let pre = tensor_mor(o, o, i, j, id, &f);
                        push(
                            (slot(o, j), compose(src, dst, tensor(j, o), &post, &psi)),
                            (slot(o, i), compose(tensor(o, i), src, dst, &psi, &pre)),
                        );
                    }
                }
            }
        }
    }
    QuotientSpace::new(Subspace::span(c.field, total, &rels)).dim()
}

fn criterion4() -> Result<Outcome> {
    let c = build_graded_z3_zeta(prime(7))?;
    let all = c.all_objects();
    let oracle = torus_oracle(&c);
    let dim = surface_dim(&c, SurfaceSpec::new(1, vec![], &all, &all, &all))?;
    check(
        dim == 9 && oracle == 9,
        format!("torus {dim}, oracle {oracle}"),
    )
}

fn datum_corpus(field: Field) -> Result<Vec<CategoryDatum>> {
    let mut out = vec![
        build_trivial(field),
        build_graded_vect(2, &[field.one(), field.one()])?,
    ];
    if let Ok(z3) = build_graded_z3_zeta(field) {
        out.push(z3);
    }
    Ok(out)
}

fn datum_properties(c: &CategoryDatum, log: &mut Vec<String>) -> Result<bool> {
    let all = c.all_objects();
    let unit = vec![c.unit];
    let closure = ideal_closure(c, &all, &unit);
    let t = TraceContext::new(c, &all, &closure, DEFAULT_BUDGET)?.complete(true);
    let hh0 = t.annulus().dim();
    let from_unit = surface_dim(c, annulus_spec(&all, &unit, &unit))?;
    let from_closure = surface_dim(c, annulus_spec(&all, &closure, &closure))?;
    let torus = surface_dim(c, SurfaceSpec::new(1, vec![], &all, &unit, &unit))?;
    let torus_t = surface_dim(c, SurfaceSpec::new(1, vec![], &all, &unit, &all))?;
    let add = Additive::new(c);
    let simples: Vec<Vec<usize>> = all.iter().map(|&o| vec![o]).collect();
    let mut full = simples.clone();
    full.push(all.clone());
    full.push(vec![all[all.len() - 1], all[0]]);
    let u = add.unit();
    let verdict = closure_invariance_check(&add, &u, &u, &full, &simples, DEFAULT_BUDGET)?;
    let annulus = SurfaceSkein::build(c, annulus_spec(&all, &all, &all), DEFAULT_BUDGET)?;
    let union = disjoint_union(&annulus.presentation, &annulus.presentation)?.dim();
    log.push(format!(
        "{} over {}: hh0 {hh0}, annulus S=unit {from_unit}, S=closure {from_closure}, torus {torus}/{torus_t}, coend gens {} full {}, union {union}",
        c.name, c.field, verdict.dim_generators, verdict.dim_full
    ));
    Ok(hh0 == from_unit
        && hh0 == from_closure
        && torus == torus_t
        && verdict.isomorphic()
        && union == hh0 * hh0)
}

fn exterior_properties(field: Field, log: &mut Vec<String>) -> Result<bool> {
    let (e, objs) = exterior(field);
    let (lam, pilam) = (objs[2], objs[3]);
    let proj = [lam, pilam];
    let t = TraceContext::new(&e, &objs, &proj, DEFAULT_BUDGET)?;
    let hh0 = t.annulus().dim();
    let annulus = surface_dim(&e, annulus_spec(&objs, &proj, &proj))?;
    let from_lam = surface_dim(&e, annulus_spec(&objs, &[lam], &proj))?;
    let labelled = |tt: &[ModId]| {
        SurfaceSpec::new(
            0,
            vec![vec![(lam, Orientation::Up)], vec![]],
            &objs,
            &proj,
            tt,
        )
    };
    let small_t = surface_dim(&e, labelled(&proj))?;
    let large_t = surface_dim(&e, labelled(&objs))?;
    let sum = e.direct_sum_obj(lam, pilam);
    let verdict = closure_invariance_check(
        &e,
        &e.unit(),
        &e.unit(),
        &[lam, pilam, sum],
        &proj,
        DEFAULT_BUDGET,
    )?;
    let disc = SurfaceSkein::build(
        &e,
        SurfaceSpec::new(0, vec![vec![]], &objs, &proj, &proj),
        DEFAULT_BUDGET,
    )?;
    let ann = SurfaceSkein::build(&e, annulus_spec(&objs, &proj, &proj), DEFAULT_BUDGET)?;
    let union = disjoint_union(&ann.presentation, &disc.presentation)?.dim();
    log.push(format!(
        "exterior: hh0 {hh0}, annulus {annulus}, S={{Lambda}} {from_lam}, labelled annulus T=proj {small_t} T=all {large_t}, coend gens {} full {}, union {union}",
        verdict.dim_generators, verdict.dim_full
    ));
    Ok(hh0 == annulus
        && hh0 == from_lam
        && small_t == large_t
        && verdict.isomorphic()
        && union == annulus * disc.dim())
}

fn criterion5() -> Result<Outcome> {
    let mut log = Vec::new();
    let mut pass = true;
    for c in datum_corpus(Field::Rational)?
        .iter()
        .take(2)
        .chain(&datum_corpus(prime(7))?)
    {
        pass &= datum_properties(c, &mut log)?;
    }
    pass &= exterior_properties(prime(7), &mut log)?;
    check(pass, log.join("; "))
}

fn criterion6() -> Result<Outcome> {
    let c = build_graded_z3_zeta(prime(7))?;
    let all = c.all_objects();
    let t = TraceContext::new(&c, &all, &all, DEFAULT_BUDGET)?.complete(true);
    let graded = t.loop_certificate(&all)?;
    let (e, objs) = exterior(prime(7));
    let te = TraceContext::new(&e, &objs, &objs, DEFAULT_BUDGET)?;
    let ext = te.loop_certificate(&[objs[0], objs[2]])?;
    let pass = graded.passed()
        && graded.rank == 3
        && ext.passed()
        && ext.rank == 2
        && graded.verdicts.len() <= graded.annulus_dim
        && ext.verdicts.len() <= ext.annulus_dim;
    check(
        pass,
        format!(
            "graded: rank {} of annulus {}; exterior {{1, Lambda}}: rank {} of annulus {}",
            graded.rank, graded.annulus_dim, ext.rank, ext.annulus_dim
        ),
    )
}

fn criterion7() -> Result<Outcome> {
    let field = prime(7);
    let (e, objs) = exterior(field);
    let (one, lam, pilam) = (objs[0], objs[2], objs[3]);
    let proj = [lam, pilam];
    let direct = TraceContext::new(&e, &objs, &proj, DEFAULT_BUDGET)?
        .disc_closed()?
        .dim();
    let q = e.direct_sum_obj(pilam, pilam);
    let eps = e.hom_basis(&lam, &one)[0].clone();
    let odd = e.hom_basis(&pilam, &lam);
    let (id4, zero4) = (Matrix::identity(field, 4), Matrix::zeros(field, 4, 4));
    let legs = [id4.hstack(&zero4), zero4.hstack(&id4)]
        .into_iter()
        .zip(&odd)
        .map(|(m, o)| Ok(e.compose(o, &e.mor(q, pilam, m)?)))
        .collect::<Result<Vec<_>>>()?;
    let cover = e.add_mor(&legs[0], &legs[1]);
    let exact = cover.mat.rank() == 3;
    let at = SlotRef { circle: 0, pos: 0 };
    let spec = SurfaceSpec::new(0, vec![vec![(lam, Orientation::Up)]], &objs, &proj, &proj);
    let coker = skein_nonprojective(&e, &spec, at, &cover, &eps, DEFAULT_BUDGET)?.dim();
    let closed = SurfaceSkein::build(
        &e,
        SurfaceSpec::new(0, vec![vec![(one, Orientation::Down)]], &objs, &proj, &proj),
        DEFAULT_BUDGET,
    )?;
    let (_, map) = closed.on_morphism(at, &eps, DEFAULT_BUDGET)?;
    check(
        exact && coker == direct && map.is_zero(),
        format!(
            "cokernel route {coker}, direct route {direct}, epi-induced map zero {}",
            map.is_zero()
        ),
    )
}

fn dims_summary(field: Field) -> Result<String> {
    let mut out = Vec::new();
    for c in datum_corpus(field)? {
        let all = c.all_objects();
        let t = TraceContext::new(&c, &all, &all, DEFAULT_BUDGET)?.complete(true);
        let torus = surface_dim(&c, SurfaceSpec::new(1, vec![], &all, &all, &all))?;
        out.push(format!(
            "{} {}/{}/{}/{}",
            c.name,
            t.annulus().dim(),
            t.disc_closed()?.dim(),
            t.sphere()?.dim(),
            torus
        ));
    }
    let (e, objs) = exterior(field);
    let proj = [objs[2], objs[3]];
    let t = TraceContext::new(&e, &objs, &proj, DEFAULT_BUDGET)?;
    out.push(format!(
        "exterior {}/{}/{}",
        t.annulus().dim(),
        t.disc_closed()?.dim(),
        t.sphere()?.dim()
    ));
    Ok(out.join(", "))
}

type Criterion = (&'static str, Duration, fn() -> Result<Outcome>);

fn criteria() -> Vec<Criterion> {
    vec![
        ("graded Z/3 over F7", Duration::from_secs(1), || {
            criterion1(prime(7))
        }),
        ("graded Z/3 over F13", Duration::from_secs(1), || {
            criterion1(prime(13))
        }),
        (
            "exterior algebra m-trace",
            Duration::from_secs(10),
            criterion2,
        ),
        (
            "eigenspace traces pipeline",
            Duration::from_secs(30),
            criterion3,
        ),
        ("torus over graded Z/3", Duration::from_secs(5), criterion4),
        (
            "cross-oracle and closure properties",
            Duration::from_secs(60),
            criterion5,
        ),
        (
            "loop-independence certificates",
            Duration::from_secs(5),
            criterion6,
        ),
        ("right exactness", Duration::from_secs(10), criterion7),
    ]
}

fn run(f: fn() -> Result<Outcome>) -> (Outcome, Duration) {
    let start = Instant::now();
    let outcome = f().unwrap_or_else(|e| Outcome {
        pass: false,
        summary: format!("error: {e}"),
    });
    (outcome, start.elapsed())
}

fn main() {
    let mut failures = 0;
    let mut summaries = Vec::new();
    let numbers = [1, 1, 2, 3, 4, 5, 6, 7];
    for ((name, limit, f), number) in criteria().into_iter().zip(numbers) {
        let (outcome, elapsed) = run(f);
        let timely = elapsed <= limit;
        let pass = outcome.pass && timely;
        failures += usize::from(!pass);
        println!(
            "criterion {number} ({name}): {} [{}; {} ms, limit {} ms]",
            if pass { "PASS" } else { "FAIL" },
            outcome.summary,
            elapsed.as_millis(),
            limit.as_millis()
        );
        summaries.push(outcome.summary);
    }

    let rerun: Vec<String> = criteria()
        .into_iter()
        .map(|(_, _, f)| run(f).0.summary)
        .collect();
    let identical = rerun == summaries;
    let (d7, d13) = (dims_summary(prime(7)), dims_summary(prime(13)));
    let agree = matches!((&d7, &d13), (Ok(a), Ok(b)) if a == b);
    let pass = identical && agree;
    failures += usize::from(!pass);
    println!(
        "criterion 8 (determinism): {} [reruns identical {identical}; F7 {}; F13 {}]",
        if pass { "PASS" } else { "FAIL" },
        d7.unwrap_or_else(|e| e.to_string()),
        d13.unwrap_or_else(|e| e.to_string())
    );
    println!("acceptance: {} of 8 criteria passed", 8 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
