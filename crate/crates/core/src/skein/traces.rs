use serde::Serialize;

use crate::catdata::{ideal_closure, Pivotal};
use crate::coend::{CylinderCoend, CylinderFunctor};
use crate::diagram::{ptr_l, ptr_r};
use crate::error::{Error, Result};
use crate::exactla::{annihilator, solve, vec_sub, Matrix, QuotientSpace, Scalar, Subspace};
use crate::skein::SkeinPresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MTraceSide {
    Left,
    Right,
    TwoSided,
}

/// The annulus skein module `⊕_{X∈I} End(X) / Span{fg − gf}` together with the
/// partial-trace relations that cut it down to the closed disc and the sphere.
pub struct TraceContext<'a, C: Pivotal> {
    pub cat: &'a C,
    /// Objects over which partial-trace relations are generated.
    pub listed: Vec<C::Obj>,
    pub ideal: Vec<C::Obj>,
    pub coend: CylinderCoend<'a, C>,
    /// Whether `listed` exhausts the category up to direct sums.
    pub complete: bool,
    pub warnings: Vec<String>,
}

impl<'a, C: Pivotal> TraceContext<'a, C> {
    pub fn new(cat: &'a C, listed: &[C::Obj], ideal: &[C::Obj], budget: usize) -> Result<Self> {
        if ideal.is_empty() {
            return Err(Error::Admissibility("the ideal is empty".into()));
        }
        let mut warnings = Vec::new();
        let closure = ideal_closure(cat, listed, ideal);
        if closure.iter().any(|o| !ideal.contains(o)) {
            let extra: Vec<String> = closure
                .iter()
                .filter(|o| !ideal.contains(o))
                .map(|o| cat.obj_name(o))
                .collect();
            warnings.push(format!(
                "ideal is not closed within the listed objects; closure adds {}",
                extra.join(", ")
            ));
        }
        let coend = CylinderCoend::new(CylinderFunctor::hom(cat), ideal, budget)?;
        Ok(TraceContext {
            cat,
            listed: listed.to_vec(),
            ideal: ideal.to_vec(),
            coend,
            complete: false,
            warnings,
        })
    }

    /// Marks `listed` as the whole category (no generator restriction).
    pub fn complete(mut self, complete: bool) -> Self {
        self.complete = complete;
        self
    }

    fn provenance(&self) -> Vec<String> {
        let c = self.cat;
        self.ideal
            .iter()
            .flat_map(|x| {
                let name = c.obj_name(x);
                (0..c.hom_dim(x, x)).map(move |k| format!("loop {name} #{k}"))
            })
            .collect()
    }

    fn presentation(
        &self,
        kind: &str,
        quotient: QuotientSpace,
        restricted: bool,
    ) -> SkeinPresentation {
        let mut p = SkeinPresentation::new(kind, quotient, self.provenance());
        p.generator_restricted = restricted;
        p.warnings = self.warnings.clone();
        p
    }

    pub fn annulus(&self) -> SkeinPresentation {
        self.presentation("annulus", self.coend.result.quotient.clone(), false)
    }

    /// Ambient vector of the loop labelled by `X` with a vertex `f ∈ End(X)`;
    /// `X` may be any object that decomposes over the ideal.
    pub fn loop_ambient(&self, x: &C::Obj, f: &C::Mor) -> Result<Vec<Scalar>> {
        self.coend.ambient_of(x, f)
    }

    /// Class of the loop `Γ_X(f)` in the annulus skein module.
    pub fn loop_class(&self, x: &C::Obj, f: &C::Mor) -> Result<Vec<Scalar>> {
        let c = self.cat;
        if !self.ideal.contains(x) {
            return Err(Error::Admissibility(format!(
                "{} is not in the ideal",
                c.obj_name(x)
            )));
        }
        if c.src(f) != *x || c.dst(f) != *x {
            return Err(Error::Admissibility(format!(
                "vertex label is not an endomorphism of {}",
                c.obj_name(x)
            )));
        }
        self.coend.class_of(x, f)
    }

    /// `[f] − [ptr_l^X(f)]` for listed `X`, `V` in the ideal, basis `f ∈ End(X⊗V)`.
    pub fn nl_relations(&self) -> Result<Vec<Vec<Scalar>>> {
        let c = self.cat;
        let mut out = Vec::new();
        for x in &self.listed {
            for v in &self.ideal {
                let xv = c.tensor_obj(x, v);
                for f in c.hom_basis(&xv, &xv) {
                    let tr = ptr_l(c, &f, x, v, v)?;
                    push_nonzero(
                        &mut out,
                        vec_sub(&self.loop_ambient(&xv, &f)?, &self.loop_ambient(v, &tr)?),
                    );
                }
            }
        }
        Ok(out)
    }

    /// `[f] − [ptr_r^X(f)]` for listed `X`, `V` in the ideal, basis `f ∈ End(V⊗X)`.
    pub fn nr_relations(&self) -> Result<Vec<Vec<Scalar>>> {
        let c = self.cat;
        let mut out = Vec::new();
        for x in &self.listed {
            for v in &self.ideal {
                let vx = c.tensor_obj(v, x);
                for f in c.hom_basis(&vx, &vx) {
                    let tr = ptr_r(c, &f, x, v, v)?;
                    push_nonzero(
                        &mut out,
                        vec_sub(&self.loop_ambient(&vx, &f)?, &self.loop_ambient(v, &tr)?),
                    );
                }
            }
        }
        Ok(out)
    }

    pub fn disc_closed(&self) -> Result<SkeinPresentation> {
        let q = self
            .coend
            .result
            .quotient
            .quotient_by(&self.nl_relations()?);
        Ok(self.presentation("closed disc", q, !self.complete))
    }

    pub fn sphere(&self) -> Result<SkeinPresentation> {
        let mut rels = self.nl_relations()?;
        rels.extend(self.nr_relations()?);
        let q = self.coend.result.quotient.quotient_by(&rels);
        Ok(self.presentation("sphere", q, !self.complete))
    }

    /// Traces on the ideal, as functionals on `⊕ End(X)`.
    pub fn trace_space(&self) -> Subspace {
        annihilator(self.coend.result.quotient.relations())
    }

    pub fn mtrace_space(&self, side: MTraceSide) -> Result<Subspace> {
        let mut rels = self.coend.result.quotient.relations().basis_vectors();
        if side != MTraceSide::Left {
            rels.extend(self.nr_relations()?);
        }
        if side != MTraceSide::Right {
            rels.extend(self.nl_relations()?);
        }
        let n = self.coend.result.ambient_dim();
        Ok(annihilator(&Subspace::span(self.cat.field(), n, &rels)))
    }

    /// `t(f)` for a functional `t` on `⊕ End(X)` and `f ∈ End(Z)`.
    pub fn apply(&self, t: &[Scalar], f: &C::Mor) -> Result<Scalar> {
        let v = self.loop_ambient(&self.cat.src(f), f)?;
        Ok(t.iter()
            .zip(&v)
            .fold(self.cat.field().zero(), |acc, (a, b)| &acc + &(a * b)))
    }

    /// Checks `t_{V⊗W}(f) = t_V(ptr_r^W(f))` (right) or
    /// `t_{W⊗V}(f) = t_V(ptr_l^W(f))` (left) for `V` in the ideal, listed `W`
    /// and every basis endomorphism `f`.
    pub fn check_partial_trace(&self, t: &[Scalar], side: MTraceSide) -> Result<bool> {
        let c = self.cat;
        for w in &self.listed {
            for v in &self.ideal {
                if side != MTraceSide::Left {
                    let vw = c.tensor_obj(v, w);
                    for f in c.hom_basis(&vw, &vw) {
                        if self.apply(t, &f)? != self.apply(t, &ptr_r(c, &f, w, v, v)?)? {
                            return Ok(false);
                        }
                    }
                }
                if side != MTraceSide::Right {
                    let wv = c.tensor_obj(w, v);
                    for f in c.hom_basis(&wv, &wv) {
                        if self.apply(t, &f)? != self.apply(t, &ptr_l(c, &f, w, v, v)?)? {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Lower-bound certificate for the loops `Γ_X`, `X ∈ J`.
    pub fn loop_certificate(&self, j: &[C::Obj]) -> Result<LoopCertificate> {
        let c = self.cat;
        let mut verdicts = Vec::new();
        let mut classes = Vec::new();
        for (i, x) in j.iter().enumerate() {
            let basis = c.hom_basis(x, x);
            let commutators_ok = basis.iter().all(|a| {
                basis.iter().all(|b| {
                    let comm = c.sub_mor(&c.compose(a, b), &c.compose(b, a));
                    !is_invertible(c, &comm)
                })
            });
            // image of ζ′_i: fg through the other members of J, and commutators
            let mut image: Vec<Vec<Scalar>> = Vec::new();
            for (k, y) in j.iter().enumerate() {
                if k == i {
                    continue;
                }
                for f in c.hom_basis(y, x) {
                    for g in c.hom_basis(x, y) {
                        image.push(c.coords(&c.compose(&f, &g)));
                    }
                }
            }
            for a in &basis {
                for b in &basis {
                    image.push(c.coords(&c.sub_mor(&c.compose(a, b), &c.compose(b, a))));
                }
            }
            let id = c.coords(&c.identity(x));
            let identity_outside_image = !Subspace::span(c.field(), id.len(), &image).contains(&id);
            classes.push(self.loop_class(x, &c.identity(x))?);
            verdicts.push(LoopVerdict {
                object: c.obj_name(x),
                commutators_non_invertible: commutators_ok,
                identity_outside_image,
            });
        }
        let rank = Subspace::span(c.field(), self.coend.dim(), &classes).dim();
        Ok(LoopCertificate {
            verdicts,
            rank,
            annulus_dim: self.coend.dim(),
        })
    }
}

fn push_nonzero(out: &mut Vec<Vec<Scalar>>, v: Vec<Scalar>) {
    if v.iter().any(|x| !x.is_zero()) {
        out.push(v);
    }
}

/// An endomorphism is invertible iff it has a left inverse in `End(X)`.
fn is_invertible<C: Pivotal>(c: &C, f: &C::Mor) -> bool {
    let x = c.src(f);
    let cols: Vec<Vec<Scalar>> = c
        .hom_basis(&x, &x)
        .iter()
        .map(|g| c.embed(&c.compose(g, f)))
        .collect();
    let id = c.embed(&c.identity(&x));
    if cols.is_empty() {
        return id.iter().all(|s| s.is_zero());
    }
    let m = Matrix::from_columns(c.field(), id.len(), &cols);
    matches!(solve(&m, &id), Ok(Some(_)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopVerdict {
    pub object: String,
    pub commutators_non_invertible: bool,
    pub identity_outside_image: bool,
}

impl LoopVerdict {
    pub fn certified(&self) -> bool {
        self.commutators_non_invertible && self.identity_outside_image
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopCertificate {
    pub verdicts: Vec<LoopVerdict>,
    /// Rank of the loop classes `[id_X]` in the annulus skein module.
    pub rank: usize,
    pub annulus_dim: usize,
}

impl LoopCertificate {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(LoopVerdict::certified) && self.rank == self.verdicts.len()
    }
}
