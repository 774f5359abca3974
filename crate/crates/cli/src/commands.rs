use serde_json::json;

use skein_core::catdata::{ideal_closure, Pivotal};
use skein_core::coend::{closure_invariance_check, htr_hom};
use skein_core::exactla::{Field, Scalar};
use skein_core::skein::{
    example59_pipeline, interval_skein, BoundaryValue, MTraceSide, SkeinPresentation, SurfaceSkein,
    SurfaceSpec, TraceContext,
};
use skein_core::{Error, Result};

use crate::load::Session;
use crate::manifold::{parse_labels, Manifold};
use crate::report::Report;

/// Per-command options shared by all categories.
#[derive(Clone, Debug, Default)]
pub struct Opts {
    pub s: Option<String>,
    pub t: Option<String>,
    pub manifold: Option<String>,
    pub labels: Option<String>,
    pub budget: usize,
}

fn header<C: Pivotal>(r: &mut Report, s: &Session<C>) {
    r.row("field", s.cat.field());
    r.row("objects", s.names(&s.listed));
}

/// A scalar without its field, which the report header already names.
fn scalar(x: &Scalar) -> String {
    x.to_string()
        .split(" mod ")
        .next()
        .unwrap_or_default()
        .to_string()
}

fn vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(scalar).collect();
    format!("[{}]", parts.join(", "))
}

fn matrix(m: &[Vec<Scalar>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| vector(r)).collect();
    format!("[{}]", rows.join(", "))
}

fn pair<C: Pivotal>(s: &Session<C>, labels: Option<&str>) -> Result<(C::Obj, C::Obj)> {
    let Some(l) = labels else {
        let u = s.cat.unit();
        return Ok((u.clone(), u));
    };
    match l.split_once(',') {
        Some((a, b)) => Ok((s.object(a)?, s.object(b)?)),
        None => Err(Error::Invalid(format!(
            "expected two objects 'V,W', got '{l}'"
        ))),
    }
}

fn boundary<C: Pivotal>(
    s: &Session<C>,
    labels: Option<&str>,
    circles: usize,
) -> Result<Vec<BoundaryValue<C::Obj>>> {
    let mut out: Vec<BoundaryValue<C::Obj>> = match labels {
        None => Vec::new(),
        Some(l) => parse_labels(l)
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|(n, o)| Ok((s.object(&n)?, o)))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?,
    };
    if out.len() > circles {
        return Err(Error::Invalid(format!(
            "{} labelled circles for {circles} boundary circles",
            out.len()
        )));
    }
    out.resize_with(circles, Vec::new);
    Ok(out)
}

pub fn skein<C: Pivotal>(s: &Session<C>, o: &Opts) -> Result<Report> {
    let text = o.manifold.as_deref().unwrap_or("annulus");
    let m = Manifold::parse(text)?;
    let sa = s.select(o.s.as_deref())?;
    let t = match &o.t {
        Some(t) => s.select(Some(t))?,
        None => s.listed.clone(),
    };
    let mut r = Report::new(format!("skein module of {text}"));
    header(&mut r, s);
    r.row("S", s.names(&sa));
    let p: SkeinPresentation = match &m {
        Manifold::Interval(v, w) => interval_skein(s.cat, &s.object(v)?, &s.object(w)?, &sa)?,
        _ => {
            r.row("T", s.names(&t));
            let (genus, circles) = m.topology().expect("surface");
            let labels = match &m {
                Manifold::Surface {
                    labels: Some(l), ..
                } => Some(l.as_str()),
                _ => o.labels.as_deref(),
            };
            let mut spec =
                SurfaceSpec::new(genus, boundary(s, labels, circles)?, &s.listed, &sa, &t);
            spec.complete = s.complete;
            SurfaceSkein::build(s.cat, spec, o.budget)?.presentation
        }
    };
    r.dim("dim", p.dim());
    r.row("ambient", p.ambient_dim());
    r.row("relations", p.relation_count());
    r.row("representatives", p.representatives().join("; "));
    for w in &p.warnings {
        r.row("warning", w);
    }
    r.record(json!({ "command": "skein", "manifold": text, "result": p.record() }));
    Ok(r)
}

pub fn traces<C: Pivotal>(s: &Session<C>, o: &Opts) -> Result<Report> {
    let ideal = s.select(o.s.as_deref())?;
    let ctx = TraceContext::new(s.cat, &s.listed, &ideal, o.budget)?.complete(s.complete);
    let mut r = Report::new("traces and modified traces");
    header(&mut r, s);
    r.row("ideal", s.names(&ideal));
    for w in &ctx.warnings {
        r.row("warning", w);
    }
    let annulus = ctx.annulus();
    r.dim("annulus", annulus.dim());
    r.dim("disc (closed)", ctx.disc_closed()?.dim());
    r.dim("sphere", ctx.sphere()?.dim());
    r.dim("traces", ctx.trace_space().dim());
    let mut sides = Vec::new();
    for (name, side) in [
        ("right", MTraceSide::Right),
        ("left", MTraceSide::Left),
        ("two-sided", MTraceSide::TwoSided),
    ] {
        let space = ctx.mtrace_space(side)?;
        r.dim(&format!("{name} m-traces"), space.dim());
        let mut functionals = Vec::new();
        for (i, f) in space.basis_vectors().iter().enumerate() {
            let ok = ctx.check_partial_trace(f, side)?;
            r.row(
                format!("  {name} #{i}"),
                format!(
                    "{} partial trace {}",
                    vector(f),
                    if ok { "ok" } else { "FAILED" }
                ),
            );
            if !ok {
                r.fail(format!(
                    "{name} m-trace #{i} violates the partial trace identity"
                ));
            }
            functionals.push(f.clone());
        }
        sides.push(json!({ "side": name, "dim": space.dim(), "basis": functionals }));
    }
    let certificate = match o.labels.as_deref() {
        Some(l) => {
            let j = s.select(Some(l))?;
            let cert = ctx.loop_certificate(&j)?;
            r.row(
                "loop classes",
                format!(
                    "{} of rank {} in annulus of dim {}",
                    s.names(&j),
                    cert.rank,
                    cert.annulus_dim
                ),
            );
            if !cert.passed() {
                r.fail("loop certificate not established");
            }
            Some(cert)
        }
        None => None,
    };
    r.record(json!({
        "command": "traces",
        "field": s.cat.field().to_string(),
        "ideal": s.names(&ideal),
        "annulus": annulus.record(),
        "mtraces": sides,
        "loop_certificate": certificate,
    }));
    Ok(r)
}

pub fn coend<C: Pivotal>(s: &Session<C>, o: &Opts) -> Result<Report> {
    let (v, w) = pair(s, o.labels.as_deref())?;
    let full = match &o.t {
        Some(t) => s.select(Some(t))?,
        None => s.listed.clone(),
    };
    let generators = match &o.s {
        Some(g) => s.select(Some(g))?,
        None => full.clone(),
    };
    let verdict = closure_invariance_check(s.cat, &v, &w, &full, &generators, o.budget)?;
    let mut r = Report::new(format!(
        "coend of Hom(X⊗{}, {}⊗X)",
        s.cat.obj_name(&v),
        s.cat.obj_name(&w)
    ));
    header(&mut r, s);
    r.row("generators", s.names(&generators));
    r.row("full", s.names(&full));
    r.dim("dim over generators", verdict.dim_generators);
    r.dim("dim over full", verdict.dim_full);
    r.row("rank xi", verdict.rank_xi);
    r.row("xi isomorphism", verdict.isomorphic());
    if let Some(x) = &verdict.counterexample {
        r.fail(format!("xi is not an isomorphism, witness {}", vector(x)));
    }
    r.record(json!({
        "command": "coend",
        "field": s.cat.field().to_string(),
        "v": s.cat.obj_name(&v),
        "w": s.cat.obj_name(&w),
        "dim_generators": verdict.dim_generators,
        "dim_full": verdict.dim_full,
        "rank_xi": verdict.rank_xi,
        "isomorphic": verdict.isomorphic(),
    }));
    Ok(r)
}

pub fn htr<C: Pivotal>(s: &Session<C>, o: &Opts) -> Result<Report> {
    let acting = match &o.t {
        Some(t) => s.select(Some(t))?,
        None => s.listed.clone(),
    };
    let pairs: Vec<(C::Obj, C::Obj)> = match o.labels.as_deref() {
        Some(l) => vec![pair(s, Some(l))?],
        None => s
            .listed
            .iter()
            .flat_map(|a| s.listed.iter().map(move |b| (a.clone(), b.clone())))
            .collect(),
    };
    let mut r = Report::new("horizontal trace hom spaces");
    header(&mut r, s);
    r.row("acting", s.names(&acting));
    for (b1, b2) in &pairs {
        let d = htr_hom(s.cat, &acting, b1, b2, o.budget)?.dim();
        let (n1, n2) = (s.cat.obj_name(b1), s.cat.obj_name(b2));
        r.dim(&format!("Hom({n1}, {n2})"), d);
        r.record(json!({ "command": "htr", "field": s.cat.field().to_string(), "from": n1, "to": n2, "dim": d }));
    }
    Ok(r)
}

pub fn closure<C: Pivotal>(s: &Session<C>, o: &Opts) -> Result<Report> {
    let seed = s.select(o.s.as_deref())?;
    let closed = ideal_closure(s.cat, &s.listed, &seed);
    let mut r = Report::new("tensor ideal closure");
    header(&mut r, s);
    r.row("seed", s.names(&seed));
    r.row("closure", s.names(&closed));
    r.dim("size", closed.len());
    let names: Vec<String> = closed.iter().map(|x| s.cat.obj_name(x)).collect();
    r.record(json!({ "command": "closure", "field": s.cat.field().to_string(), "seed": s.names(&seed), "closure": names }));
    Ok(r)
}

/// Samples `λ:μ,λ:μ,…`; defaults to the four corners of `{0,1}²`.
pub fn example59(field: Field, samples: Option<&str>) -> Result<Report> {
    let samples: Vec<(Scalar, Scalar)> = match samples {
        None => [(0, 0), (1, 0), (0, 1), (1, 1)]
            .iter()
            .map(|&(a, b)| (field.int(a), field.int(b)))
            .collect(),
        Some(text) => text
            .split(',')
            .map(|p| {
                let (a, b) = p.split_once(':').ok_or_else(|| {
                    Error::Invalid(format!("sample '{p}' is not of the form lambda:mu"))
                })?;
                Ok((field.parse_scalar(a.trim())?, field.parse_scalar(b.trim())?))
            })
            .collect::<Result<_>>()?,
    };
    let rep = example59_pipeline(field, &samples)?;
    let mut r = Report::new("modules X(lambda, mu) over the exterior algebra on a, b, c");
    r.row("field", field);
    for (i, smp) in rep.samples.iter().enumerate() {
        r.row(
            format!("sample {i}"),
            format!(
                "lambda={} mu={} dim B0={} psi_ac={} psi_bc={}",
                scalar(&smp.lambda),
                scalar(&smp.mu),
                smp.b0_dim,
                matrix(&smp.psi_ac),
                matrix(&smp.psi_bc)
            ),
        );
    }
    for (i, row) in rep.traces.iter().enumerate() {
        r.row(format!("tr row {i}"), vector(row));
    }
    r.row("delta check", rep.delta_ok);
    r.row("traces well defined", rep.traces_well_defined);
    r.dim("coend dim", rep.coend_dim);
    r.dim("rank of [id_X]", rep.rank);
    if !rep.passed() {
        r.fail("delta pattern not established");
    }
    r.record(json!({ "command": "example59", "passed": rep.passed(), "report": rep }));
    Ok(r)
}
