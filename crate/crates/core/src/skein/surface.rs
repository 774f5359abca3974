use std::collections::HashMap;

use crate::catdata::{dual_mor, ideal_closure, Pivotal};
use crate::diagram::{
    collapse, evaluate, trace_l, unit_scalar, Cell, DiagramWord, Orientation, StrandType,
};
use crate::error::{Error, Result};
use crate::exactla::{lin_comb, Matrix, QuotientSpace, Scalar, Subspace};
use crate::skein::traces::TraceContext;
use crate::skein::{in_ideal, SkeinPresentation};

/// Labels on one boundary circle, read outwards in cyclic order.
pub type BoundaryValue<O> = Vec<(O, Orientation)>;

/// A compact oriented surface of genus `genus` with one boundary circle per
/// entry of `boundary`, presented as a polygon with identified edge pairs
/// `a₁ b₁ a₁⁻¹ b₁⁻¹ ⋯ c₁ ∂₁ c₁⁻¹ ⋯ ∂ₙ`.
#[derive(Clone, Debug)]
pub struct SurfaceSpec<O> {
    pub genus: usize,
    pub boundary: Vec<BoundaryValue<O>>,
    /// Objects over which partial-trace relations and closures are formed.
    pub listed: Vec<O>,
    /// Whether `listed` exhausts the category up to direct sums.
    pub complete: bool,
    /// Admissibility subcategory `S`.
    pub admissibility: Vec<O>,
    /// Coend scope `T ⊇ S`.
    pub coend_scope: Vec<O>,
    /// Order in which edge pairs are glued; defaults to polygon order.
    pub cut_schedule: Option<Vec<usize>>,
}

impl<O: Clone> SurfaceSpec<O> {
    pub fn new(
        genus: usize,
        boundary: Vec<BoundaryValue<O>>,
        listed: &[O],
        s: &[O],
        t: &[O],
    ) -> Self {
        SurfaceSpec {
            genus,
            boundary,
            listed: listed.to_vec(),
            complete: false,
            admissibility: s.to_vec(),
            coend_scope: t.to_vec(),
            cut_schedule: None,
        }
    }

    pub fn pair_count(&self) -> usize {
        2 * self.genus + self.boundary.len().saturating_sub(1)
    }

    pub fn pair_names(&self) -> Vec<String> {
        let mut names = Vec::new();
        for i in 1..=self.genus {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
        }
        for i in 1..self.boundary.len() {
            names.push(format!("c{i}"));
        }
        names
    }

    fn schedule(&self) -> Result<Vec<usize>> {
        let n = self.pair_count();
        match &self.cut_schedule {
            None => Ok((0..n).collect()),
            Some(s) => {
                let mut sorted = s.clone();
                sorted.sort_unstable();
                if sorted != (0..n).collect::<Vec<_>>() {
                    return Err(Error::Invalid(format!(
                        "cut schedule must order the {n} edge pairs"
                    )));
                }
                Ok(s.clone())
            }
        }
    }
}

/// A boundary marked point: `circle`, position on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotRef {
    pub circle: usize,
    pub pos: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Pair { p: usize, second: bool },
    Label { circle: usize, pos: usize },
}

struct Polygon<O> {
    names: Vec<String>,
    scopes: Vec<Vec<O>>,
    slots: Vec<Slot>,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    offsets: Vec<usize>,
}

enum Layout<'a, C: Pivotal> {
    Polygon(Polygon<C::Obj>),
    Closed(Box<TraceContext<'a, C>>),
}

/// The skein module of a surface with the data needed to insert morphisms at
/// boundary points.
pub struct SurfaceSkein<'a, C: Pivotal> {
    pub cat: &'a C,
    pub spec: SurfaceSpec<C::Obj>,
    pub presentation: SkeinPresentation,
    layout: Layout<'a, C>,
}

fn union<O: Clone + PartialEq>(a: &[O], b: &[O]) -> Vec<O> {
    let mut out = a.to_vec();
    for o in b {
        if !out.contains(o) {
            out.push(o.clone());
        }
    }
    out
}

fn polygon_slots(genus: usize, boundary: &[usize]) -> Vec<Slot> {
    let mut slots = Vec::new();
    for i in 0..genus {
        let (a, b) = (2 * i, 2 * i + 1);
        for (p, second) in [(a, false), (b, false), (a, true), (b, true)] {
            slots.push(Slot::Pair { p, second });
        }
    }
    let n = boundary.len();
    for (circle, &len) in boundary.iter().enumerate() {
        let c = 2 * genus + circle;
        if circle + 1 < n {
            slots.push(Slot::Pair {
                p: c,
                second: false,
            });
        }
        slots.extend((0..len).map(|pos| Slot::Label { circle, pos }));
        if circle + 1 < n {
            slots.push(Slot::Pair { p: c, second: true });
        }
    }
    slots
}

fn product(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..s).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

impl<O: Clone + PartialEq> Polygon<O> {
    fn strands(
        &self,
        spec: &SurfaceSpec<O>,
        t: &[usize],
        mixed: Option<(usize, usize)>,
    ) -> Vec<StrandType<O>> {
        self.slots
            .iter()
            .map(|s| match *s {
                Slot::Pair { p, second: false } => StrandType::up(self.scopes[p][t[p]].clone()),
                Slot::Pair { p, second: true } => {
                    let k = match mixed {
                        Some((q, j)) if q == p => j,
                        _ => t[p],
                    };
                    StrandType::down(self.scopes[p][k].clone())
                }
                Slot::Label { circle, pos } => {
                    let (o, orientation) = spec.boundary[circle][pos].clone();
                    StrandType {
                        object: o,
                        orientation,
                    }
                }
            })
            .collect()
    }

    fn position(&self, slot: Slot) -> usize {
        self.slots
            .iter()
            .position(|s| *s == slot)
            .expect("slot exists")
    }
}

/// One layer: identities everywhere except a box at `pos`.
fn insertion<O: Clone + PartialEq, M: Clone>(
    strands: &[StrandType<O>],
    pos: usize,
    dst: StrandType<O>,
    mor: M,
) -> DiagramWord<O, M> {
    let mut target = strands.to_vec();
    target[pos] = dst.clone();
    let layer = strands
        .iter()
        .enumerate()
        .map(|(k, s)| {
            if k == pos {
                Cell::Box {
                    src: vec![s.clone()],
                    dst: vec![dst.clone()],
                    mor: mor.clone(),
                }
            } else {
                Cell::Identity(s.clone())
            }
        })
        .collect();
    DiagramWord {
        source: strands.to_vec(),
        target,
        layers: vec![layer],
    }
}

impl<'a, C: Pivotal> SurfaceSkein<'a, C> {
    pub fn build(cat: &'a C, spec: SurfaceSpec<C::Obj>, budget: usize) -> Result<Self> {
        let schedule = spec.schedule()?;
        if let Some(s) = spec
            .admissibility
            .iter()
            .find(|s| !spec.coend_scope.contains(s))
        {
            return Err(Error::Invalid(format!(
                "{} is admissible but not in the coend scope",
                cat.obj_name(s)
            )));
        }
        let s_bar = ideal_closure(cat, &spec.listed, &spec.admissibility);
        if s_bar.is_empty() {
            return Err(Error::Admissibility(
                "the admissibility subcategory is empty".into(),
            ));
        }
        let t_bar = union(&s_bar, &spec.coend_scope);
        let points: Vec<C::Obj> = spec
            .boundary
            .iter()
            .flatten()
            .map(|(o, s)| super::point_object(cat, o, *s))
            .collect();
        let needs_cut = !points.iter().any(|o| in_ideal(cat, o, &s_bar));
        let pairs = spec.pair_count();
        if pairs == 0 && needs_cut {
            let unit = cat.unit();
            if points.iter().any(|o| *o != unit) {
                return Err(Error::Admissibility(
                    "boundary value is not admissible and there is no edge to cut along".into(),
                ));
            }
            let ctx = TraceContext::new(cat, &spec.listed, &s_bar, budget)?.complete(spec.complete);
            let presentation = if spec.boundary.is_empty() {
                ctx.sphere()?
            } else {
                ctx.disc_closed()?
            };
            return Ok(SurfaceSkein {
                cat,
                spec,
                presentation,
                layout: Layout::Closed(Box::new(ctx)),
            });
        }
        let scopes: Vec<Vec<C::Obj>> = (0..pairs)
            .map(|p| {
                if needs_cut && p == schedule[0] {
                    s_bar.clone()
                } else {
                    t_bar.clone()
                }
            })
            .collect();
        let lens: Vec<usize> = spec.boundary.iter().map(Vec::len).collect();
        let count = scopes
            .iter()
            .try_fold(1usize, |acc, s| acc.checked_mul(s.len()));
        if count.is_none_or(|n| n > budget) {
            return Err(Error::Budget(format!(
                "too many label tuples for budget {budget}"
            )));
        }
        let tuples = product(&scopes.iter().map(Vec::len).collect::<Vec<_>>());
        let mut poly = Polygon {
            names: spec.pair_names(),
            scopes,
            slots: polygon_slots(spec.genus, &lens),
            index: tuples
                .iter()
                .enumerate()
                .map(|(k, t)| (t.clone(), k))
                .collect(),
            tuples,
            offsets: Vec::new(),
        };
        let unit = cat.unit();
        let mut total = 0usize;
        let mut provenance = Vec::new();
        for t in &poly.tuples {
            poly.offsets.push(total);
            let d = cat.hom_dim(&unit, &collapse(cat, &poly.strands(&spec, t, None)));
            total += d;
            if total > budget {
                return Err(Error::Budget(format!(
                    "surface ambient dimension exceeds budget {budget}"
                )));
            }
            let label: Vec<String> = (0..pairs)
                .map(|p| format!("{}={}", poly.names[p], cat.obj_name(&poly.scopes[p][t[p]])))
                .collect();
            let label = if label.is_empty() {
                "disc".to_string()
            } else {
                label.join(",")
            };
            provenance.extend((0..d).map(|k| format!("{label} #{k}")));
        }
        let relations = Self::relations(cat, &spec, &poly, total)?;
        let quotient = QuotientSpace::new(Subspace::span(cat.field(), total, &relations));
        let mut presentation = SkeinPresentation::new(
            &format!("surface(g={},n={})", spec.genus, spec.boundary.len()),
            quotient,
            provenance,
        );
        presentation.generator_restricted = !spec.complete && pairs > 0;
        Ok(SurfaceSkein {
            cat,
            spec,
            presentation,
            layout: Layout::Polygon(poly),
        })
    }

    fn relations(
        cat: &C,
        spec: &SurfaceSpec<C::Obj>,
        poly: &Polygon<C::Obj>,
        total: usize,
    ) -> Result<Vec<Vec<Scalar>>> {
        let unit = cat.unit();
        let mut out = Vec::new();
        for p in 0..poly.scopes.len() {
            let scope = &poly.scopes[p];
            let first = poly.position(Slot::Pair { p, second: false });
            let second = poly.position(Slot::Pair { p, second: true });
            for rest in poly.tuples.iter().filter(|t| t[p] == 0) {
                for i in 0..scope.len() {
                    for j in 0..scope.len() {
                        let fs = cat.hom_basis(&scope[i], &scope[j]);
                        if fs.is_empty() {
                            continue;
                        }
                        let mut ti = rest.clone();
                        ti[p] = i;
                        let mut tj = rest.clone();
                        tj[p] = j;
                        let strands = poly.strands(spec, &ti, Some((p, j)));
                        let psis = cat.hom_basis(&unit, &collapse(cat, &strands));
                        if psis.is_empty() {
                            continue;
                        }
                        let (ki, kj) = (poly.index[&ti], poly.index[&tj]);
                        for f in &fs {
                            let w1 = insertion(
                                &strands,
                                first,
                                StrandType::up(scope[j].clone()),
                                f.clone(),
                            );
                            let w2 = insertion(
                                &strands,
                                second,
                                StrandType::down(scope[i].clone()),
                                dual_mor(cat, f),
                            );
                            let (m1, m2) = (evaluate(cat, &w1)?, evaluate(cat, &w2)?);
                            for psi in &psis {
                                let mut v = vec![cat.field().zero(); total];
                                for (k, x) in
                                    cat.coords(&cat.compose(&m1, psi)).into_iter().enumerate()
                                {
                                    v[poly.offsets[kj] + k] = x;
                                }
                                for (k, x) in
                                    cat.coords(&cat.compose(&m2, psi)).into_iter().enumerate()
                                {
                                    let y = &v[poly.offsets[ki] + k] - &x;
                                    v[poly.offsets[ki] + k] = y;
                                }
                                if v.iter().any(|x| !x.is_zero()) {
                                    out.push(v);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.presentation.dim()
    }
}

impl<'a, C: Pivotal> SurfaceSkein<'a, C> {
    /// The map induced by inserting `f` at a boundary point. Outward points
    /// labelled `V` take `f : V → V′`; inward points labelled `V` take
    /// `f : V′ → V`, inserted as `f*`. Returns the target skein module and the
    /// matrix in quotient coordinates.
    pub fn on_morphism(
        &self,
        at: SlotRef,
        f: &C::Mor,
        budget: usize,
    ) -> Result<(SurfaceSkein<'a, C>, Matrix)> {
        let c = self.cat;
        let (o, orientation) = self
            .spec
            .boundary
            .get(at.circle)
            .and_then(|b| b.get(at.pos))
            .cloned()
            .ok_or_else(|| Error::Invalid(format!("no boundary point {}:{}", at.circle, at.pos)))?;
        let (new_label, dst, mor) = match orientation {
            Orientation::Up => {
                if c.src(f) != o {
                    return Err(Error::Invalid(format!(
                        "outward point {} needs a morphism out of it",
                        c.obj_name(&o)
                    )));
                }
                let d = c.dst(f);
                (d.clone(), StrandType::up(d), f.clone())
            }
            Orientation::Down => {
                if c.dst(f) != o {
                    return Err(Error::Invalid(format!(
                        "inward point {} needs a morphism into it",
                        c.obj_name(&o)
                    )));
                }
                let s = c.src(f);
                (s.clone(), StrandType::down(s), dual_mor(c, f))
            }
        };
        let mut spec = self.spec.clone();
        spec.boundary[at.circle][at.pos] = (new_label, orientation);
        let target = SurfaceSkein::build(c, spec, budget)?;
        let field = c.field();
        let (rows, cols) = (target.dim(), self.dim());
        let mut images = Vec::with_capacity(cols);
        match (&self.layout, &target.layout) {
            (Layout::Polygon(a), Layout::Polygon(b)) if a.scopes == b.scopes => {
                let pos = a.position(Slot::Label {
                    circle: at.circle,
                    pos: at.pos,
                });
                let unit = c.unit();
                let words: Vec<C::Mor> = a
                    .tuples
                    .iter()
                    .map(|t| {
                        let strands = a.strands(&self.spec, t, None);
                        evaluate(c, &insertion(&strands, pos, dst.clone(), mor.clone()))
                    })
                    .collect::<Result<_>>()?;
                for k in 0..cols {
                    let rep = self.presentation.quotient.representative(k);
                    let mut out = vec![field.zero(); target.presentation.ambient_dim()];
                    for (ti, t) in a.tuples.iter().enumerate() {
                        let lo = a.offsets[ti];
                        let hi = a.offsets.get(ti + 1).copied().unwrap_or(rep.len());
                        if rep[lo..hi].iter().all(Scalar::is_zero) {
                            continue;
                        }
                        let strands = a.strands(&self.spec, t, None);
                        let psi = c.from_coords(&unit, &collapse(c, &strands), &rep[lo..hi]);
                        let image = c.coords(&c.compose(&words[ti], &psi));
                        let off = b.offsets[b.index[t]];
                        out[off..off + image.len()].clone_from_slice(&image);
                    }
                    images.push(out);
                }
            }
            (Layout::Closed(ctx), Layout::Polygon(b)) if b.scopes.is_empty() => {
                // loops evaluate to their left traces once a boundary point is admissible
                let mut tl = Vec::new();
                for x in &ctx.ideal {
                    for g in c.hom_basis(x, x) {
                        tl.push(trace_l(c, &g)?);
                    }
                }
                let strands: Vec<StrandType<C::Obj>> = self.spec.boundary[at.circle]
                    .iter()
                    .map(|(o, s)| StrandType {
                        object: o.clone(),
                        orientation: *s,
                    })
                    .collect();
                let word = insertion(&strands, at.pos, dst.clone(), mor.clone());
                let base = c.coords(&evaluate(c, &word)?);
                for k in 0..cols {
                    let rep = self.presentation.quotient.representative(k);
                    let s = rep
                        .iter()
                        .zip(&tl)
                        .fold(field.zero(), |acc, (a, b)| &acc + &(a * b));
                    images.push(base.iter().map(|x| &s * x).collect());
                }
            }
            (Layout::Closed(_), Layout::Closed(_)) => {
                let s = unit_scalar(c, &mor)?;
                for k in 0..cols {
                    let mut e = vec![field.zero(); cols];
                    e[k] = s.clone();
                    images.push(e);
                }
                let m = Matrix::from_columns(field, rows, &images);
                return Ok((target, m));
            }
            _ => {
                return Err(Error::Admissibility(
                    "insertion changes how the surface has to be cut for admissibility".into(),
                ))
            }
        }
        let cols_q: Vec<Vec<Scalar>> = images
            .iter()
            .map(|v| target.presentation.class_of(v))
            .collect();
        Ok((target, Matrix::from_columns(field, rows, &cols_q)))
    }
}

/// The skein module with label `X` at an outward point, computed as the
/// cokernel of `SN(Σ; Q) → SN(Σ; P)` from a presentation `Q → P → X → 0`.
/// `spec` carries `P` at the point.
pub fn skein_nonprojective<C: Pivotal>(
    cat: &C,
    spec: &SurfaceSpec<C::Obj>,
    at: SlotRef,
    q: &C::Mor,
    p: &C::Mor,
    budget: usize,
) -> Result<SkeinPresentation> {
    let label = spec
        .boundary
        .get(at.circle)
        .and_then(|b| b.get(at.pos))
        .cloned()
        .ok_or_else(|| Error::Invalid(format!("no boundary point {}:{}", at.circle, at.pos)))?;
    if label.1 != Orientation::Up {
        return Err(Error::Invalid(
            "right-exact extension needs an outward point".into(),
        ));
    }
    if cat.dst(q) != label.0 || cat.src(p) != label.0 {
        return Err(Error::Chain(
            "presentation maps do not meet at the labelled object".into(),
        ));
    }
    if !cat.is_zero_mor(&cat.compose(p, q)) {
        return Err(Error::Chain(
            "presentation maps do not compose to zero".into(),
        ));
    }
    let mut source_spec = spec.clone();
    source_spec.boundary[at.circle][at.pos] = (cat.src(q), Orientation::Up);
    let source = SurfaceSkein::build(cat, source_spec, budget)?;
    let (target, m) = source.on_morphism(at, q, budget)?;
    let field = cat.field();
    let tq = &target.presentation.quotient;
    let images: Vec<Vec<Scalar>> = (0..m.cols())
        .map(|j| {
            let terms: Vec<(Scalar, Vec<Scalar>)> = (0..m.rows())
                .map(|k| (m.get(k, j).clone(), tq.representative(k)))
                .collect();
            let refs: Vec<(Scalar, &[Scalar])> = terms
                .iter()
                .map(|(s, v)| (s.clone(), v.as_slice()))
                .collect();
            lin_comb(field, tq.ambient_dim(), &refs)
        })
        .collect();
    let mut out = target.presentation.clone();
    out.kind = format!("cokernel on {}", out.kind);
    out.quotient = tq.quotient_by(&images);
    Ok(out)
}
