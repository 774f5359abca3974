//! Skein modules of discs, annuli, spheres and polygon-presented surfaces, trace
//! and m-trace spaces, and loop-independence certificates.

mod example;
mod surface;
mod traces;

use serde::Serialize;

use crate::catdata::{sum_witness, Pivotal};
use crate::diagram::Orientation;
use crate::error::{Error, Result};
use crate::exactla::{QuotientSpace, Scalar, Subspace};

pub use example::{example59_pipeline, Example59Report, SampleReport};
pub use surface::{skein_nonprojective, BoundaryValue, SlotRef, SurfaceSkein, SurfaceSpec};
pub use traces::{LoopCertificate, LoopVerdict, MTraceSide, TraceContext};

/// A skein module presented as a quotient of a space spanned by labelled graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinPresentation {
    pub kind: String,
    pub quotient: QuotientSpace,
    /// One descriptor per ambient coordinate.
    pub provenance: Vec<String>,
    /// Set when relations were only generated from a sublist of the category.
    pub generator_restricted: bool,
    pub warnings: Vec<String>,
}

/// Machine-readable summary of a presentation.
#[derive(Clone, Debug, Serialize)]
pub struct SkeinRecord {
    pub kind: String,
    pub field: String,
    pub dim: usize,
    pub ambient: usize,
    pub relations: usize,
    pub generator_restricted: bool,
    pub representatives: Vec<String>,
    pub warnings: Vec<String>,
}

impl SkeinPresentation {
    pub fn new(kind: &str, quotient: QuotientSpace, provenance: Vec<String>) -> Self {
        SkeinPresentation {
            kind: kind.to_string(),
            quotient,
            provenance,
            generator_restricted: false,
            warnings: Vec::new(),
        }
    }

    /// A space with no relations.
    pub fn free(kind: &str, field: crate::exactla::Field, provenance: Vec<String>) -> Self {
        let q = QuotientSpace::new(Subspace::zero(field, provenance.len()));
        Self::new(kind, q, provenance)
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn relation_count(&self) -> usize {
        self.quotient.relations().dim()
    }

    pub fn class_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.quotient.project(v)
    }

    /// Provenance of the representative of each quotient basis vector.
    pub fn representatives(&self) -> Vec<String> {
        self.quotient
            .rep_basis()
            .iter()
            .map(|&k| self.provenance[k].clone())
            .collect()
    }

    pub fn record(&self) -> SkeinRecord {
        SkeinRecord {
            kind: self.kind.clone(),
            field: self.quotient.field().to_string(),
            dim: self.dim(),
            ambient: self.ambient_dim(),
            relations: self.relation_count(),
            generator_restricted: self.generator_restricted,
            representatives: self.representatives(),
            warnings: self.warnings.clone(),
        }
    }
}

/// The object carried by a marked point, read outwards.
pub(crate) fn point_object<C: Pivotal>(c: &C, o: &C::Obj, orientation: Orientation) -> C::Obj {
    match orientation {
        Orientation::Up => o.clone(),
        Orientation::Down => c.dual_obj(o),
    }
}

/// Whether `o` lies in the ideal spanned by `members` (listed, or a retract of a
/// sum of members).
pub(crate) fn in_ideal<C: Pivotal>(c: &C, o: &C::Obj, members: &[C::Obj]) -> bool {
    members.contains(o) || (!members.is_empty() && sum_witness(c, o, members).is_some())
}

fn hom_provenance<C: Pivotal>(c: &C, a: &C::Obj, b: &C::Obj) -> Vec<String> {
    let (sa, sb) = (c.obj_name(a), c.obj_name(b));
    (0..c.hom_dim(a, b))
        .map(|k| format!("{sa}->{sb}#{k}"))
        .collect()
}

/// `Hom(1, ⊗ labels)` with all marked points read outwards.
pub fn disc_skein<C: Pivotal>(c: &C, labels: &[(C::Obj, Orientation)]) -> SkeinPresentation {
    let objs: Vec<C::Obj> = labels.iter().map(|(o, s)| point_object(c, o, *s)).collect();
    let total = c.tensor_all(&objs);
    SkeinPresentation::free("disc", c.field(), hom_provenance(c, &c.unit(), &total))
}

/// `Hom(V, W)`, provided one endpoint is admissible.
pub fn interval_skein<C: Pivotal>(
    c: &C,
    v: &C::Obj,
    w: &C::Obj,
    s: &[C::Obj],
) -> Result<SkeinPresentation> {
    if !in_ideal(c, v, s) && !in_ideal(c, w, s) {
        return Err(Error::Admissibility(format!(
            "neither endpoint {} nor {} is admissible",
            c.obj_name(v),
            c.obj_name(w)
        )));
    }
    Ok(SkeinPresentation::free(
        "interval",
        c.field(),
        hom_provenance(c, v, w),
    ))
}

/// Skein module of a disjoint union: the tensor product of the presentations.
pub fn disjoint_union(p: &SkeinPresentation, q: &SkeinPresentation) -> Result<SkeinPresentation> {
    let field = p.quotient.field();
    if field != q.quotient.field() {
        return Err(Error::Field("presentations over different fields".into()));
    }
    let (n, m) = (p.ambient_dim(), q.ambient_dim());
    let unit = |len: usize, k: usize| {
        let mut e = vec![field.zero(); len];
        e[k] = field.one();
        e
    };
    let kron = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| x * y))
            .collect()
    };
    let mut rels = Vec::new();
    for r in p.quotient.relations().basis_vectors() {
        rels.extend((0..m).map(|j| kron(&r, &unit(m, j))));
    }
    for s in q.quotient.relations().basis_vectors() {
        rels.extend((0..n).map(|i| kron(&unit(n, i), &s)));
    }
    let provenance = p
        .provenance
        .iter()
        .flat_map(|a| q.provenance.iter().map(move |b| format!("{a} | {b}")))
        .collect();
    let mut out = SkeinPresentation::new(
        &format!("{} + {}", p.kind, q.kind),
        QuotientSpace::new(Subspace::span(field, n * m, &rels)),
        provenance,
    );
    out.generator_restricted = p.generator_restricted || q.generator_restricted;
    out.warnings = p.warnings.iter().chain(&q.warnings).cloned().collect();
    Ok(out)
}
