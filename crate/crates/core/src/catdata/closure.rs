//! Direct-sum/retract witnesses and ideal closure.

use crate::catdata::pivotal::Pivotal;
use crate::exactla::{solve, Matrix, Scalar};

/// One summand in a decomposition of an object `Y`: `inc : L → Y`, `proj : Y → L`.
pub struct Leg<C: Pivotal> {
    pub through: C::Obj,
    pub inc: C::Mor,
    pub proj: C::Mor,
}

impl<C: Pivotal> Clone for Leg<C> {
    fn clone(&self) -> Self {
        Leg {
            through: self.through.clone(),
            inc: self.inc.clone(),
            proj: self.proj.clone(),
        }
    }
}

/// `Σ inc ∘ proj = id_Y`: exhibits `Y` as a retract of a direct sum of the
/// `through` objects.
pub struct SumWitness<C: Pivotal> {
    pub obj: C::Obj,
    pub legs: Vec<Leg<C>>,
}

impl<C: Pivotal> Clone for SumWitness<C> {
    fn clone(&self) -> Self {
        SumWitness {
            obj: self.obj.clone(),
            legs: self.legs.clone(),
        }
    }
}

impl<C: Pivotal> SumWitness<C> {
    /// Checks `Σ inc ∘ proj = id` exactly.
    pub fn verify(&self, c: &C) -> bool {
        let parts: Vec<C::Mor> = self
            .legs
            .iter()
            .map(|l| c.compose(&l.inc, &l.proj))
            .collect();
        let one = c.field().one();
        let terms: Vec<(Scalar, &C::Mor)> = parts.iter().map(|p| (one.clone(), p)).collect();
        let total = c.lin(&self.obj, &self.obj, &terms);
        c.mor_eq(&total, &c.identity(&self.obj))
    }
}

/// Solves `id_Y = Σ x_k · g_k ∘ f_k` over basis morphisms `f_k : Y → L`,
/// `g_k : L → Y` with `L` ranging over `through`. This is the linear criterion
/// for `Y` being a retract of a finite direct sum of the `through` objects.
pub fn sum_witness<C: Pivotal>(c: &C, y: &C::Obj, through: &[C::Obj]) -> Option<SumWitness<C>> {
    if through.contains(y) {
        return Some(SumWitness {
            obj: y.clone(),
            legs: vec![Leg {
                through: y.clone(),
                inc: c.identity(y),
                proj: c.identity(y),
            }],
        });
    }
    let field = c.field();
    let target = c.embed(&c.identity(y));
    let mut candidates: Vec<(C::Obj, C::Mor, C::Mor)> = Vec::new();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for l in through {
        let fs = c.hom_basis(y, l);
        if fs.is_empty() {
            continue;
        }
        let gs = c.hom_basis(l, y);
        for g in &gs {
            for f in &fs {
                columns.push(c.embed(&c.compose(g, f)));
                candidates.push((l.clone(), g.clone(), f.clone()));
            }
        }
    }
    if columns.is_empty() {
        return None;
    }
    let m = Matrix::from_columns(field, target.len(), &columns);
    let x = solve(&m, &target).expect("matching dimensions")?;
    let legs = x
        .iter()
        .zip(candidates)
        .filter(|(xk, _)| !xk.is_zero())
        .map(|(xk, (l, g, f))| Leg {
            through: l,
            inc: g,
            proj: c.scale_mor(xk, &f),
        })
        .collect();
    Some(SumWitness {
        obj: y.clone(),
        legs,
    })
}

/// A split mono `ι : j → i` with `π ∘ ι = id_j`.
///
/// The linear criterion decides whether `j` is a retract of some `i^{⊕n}`; a
/// single pair is then searched among `ι` = basis elements and sums of two
/// basis elements, solving for `π` linearly.
pub fn retract_witness<C: Pivotal>(c: &C, j: &C::Obj, i: &C::Obj) -> Option<(C::Mor, C::Mor)> {
    if i == j {
        return Some((c.identity(j), c.identity(j)));
    }
    sum_witness(c, j, std::slice::from_ref(i))?;
    let basis = c.hom_basis(j, i);
    let mut candidates: Vec<C::Mor> = basis.clone();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            candidates.push(c.add_mor(&basis[a], &basis[b]));
        }
    }
    let pis = c.hom_basis(i, j);
    if pis.is_empty() {
        return None;
    }
    let target = c.embed(&c.identity(j));
    for iota in candidates {
        let cols: Vec<Vec<Scalar>> = pis.iter().map(|p| c.embed(&c.compose(p, &iota))).collect();
        let m = Matrix::from_columns(c.field(), target.len(), &cols);
        if let Some(x) = solve(&m, &target).expect("matching dimensions") {
            let terms: Vec<(Scalar, &C::Mor)> = x.into_iter().zip(&pis).collect();
            let pi = c.lin(i, j, &terms);
            return Some((iota, pi));
        }
    }
    None
}

/// Objects through which an ideal generated by `members` lets morphisms factor,
/// one tensor/dual step away from `members`.
fn tensor_dual_step<C: Pivotal>(c: &C, listed: &[C::Obj], members: &[C::Obj]) -> Vec<C::Obj> {
    let mut out: Vec<C::Obj> = members.to_vec();
    let mut push = |o: C::Obj| {
        if !out.contains(&o) {
            out.push(o);
        }
    };
    for m in members {
        push(c.dual_obj(m));
        for l in listed {
            push(c.tensor_obj(m, l));
            push(c.tensor_obj(l, m));
        }
    }
    out
}

/// The listed objects belonging to the ideal generated by `seed`: iterate
/// tensor-dual closure (with all listed objects) followed by the retract
/// criterion, until stable. The result keeps the order of `listed`.
pub fn ideal_closure<C: Pivotal>(c: &C, listed: &[C::Obj], seed: &[C::Obj]) -> Vec<C::Obj> {
    let mut members: Vec<C::Obj> = listed
        .iter()
        .filter(|o| seed.contains(o))
        .cloned()
        .collect();
    loop {
        let through = tensor_dual_step(c, listed, &members);
        let next: Vec<C::Obj> = listed
            .iter()
            .filter(|o| members.contains(o) || sum_witness(c, o, &through).is_some())
            .cloned()
            .collect();
        if next.len() == members.len() {
            return members;
        }
        members = next;
    }
}
