use crate::catdata::Pivotal;
use crate::coend::cylinder::{CylinderCoend, CylinderFunctor};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub dim_generators: usize,
    pub dim_full: usize,
    pub rank_xi: usize,
    /// A vector witnessing failure: a kernel vector of `ξ` (generator coend
    /// coordinates) or a class of the full coend outside its image.
    pub counterexample: Option<Vec<Scalar>>,
}

impl ClosureVerdict {
    pub fn isomorphic(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares the coend over `generators` with the coend over `full` through the
/// canonical map `ξ` induced by the inclusion of legs. Every object of `full`
/// outside `generators` must be a retract of a sum of generators; the
/// decompositions are checked and reported when missing.
pub fn closure_invariance_check<C: Pivotal>(
    c: &C,
    v: &C::Obj,
    w: &C::Obj,
    full: &[C::Obj],
    generators: &[C::Obj],
    budget: usize,
) -> Result<ClosureVerdict> {
    if let Some(g) = generators.iter().find(|g| !full.contains(g)) {
        return Err(Error::Invalid(format!(
            "generator {} is not in the object list",
            c.obj_name(g)
        )));
    }
    let small = CylinderCoend::new(
        CylinderFunctor::new(c, v.clone(), w.clone()),
        generators,
        budget,
    )?;
    let large = CylinderCoend::new(CylinderFunctor::new(c, v.clone(), w.clone()), full, budget)?;
    for o in full {
        match small.witness(o) {
            Some(wit) if wit.verify(c) => {}
            Some(_) => {
                return Err(Error::MissingWitness(format!(
                    "decomposition of {} does not verify",
                    c.obj_name(o)
                )))
            }
            None => {
                return Err(Error::MissingWitness(format!(
                    "{} is not a retract of a sum of generators",
                    c.obj_name(o)
                )))
            }
        }
    }
    let field = c.field();
    // ξ on the quotient basis of the generator coend
    let cols: Vec<Vec<Scalar>> = (0..small.dim())
        .map(|k| {
            let (slot, psi) = small.representative(k);
            large.class_of(&slot, &psi)
        })
        .collect::<Result<_>>()?;
    let xi = Matrix::from_columns(field, large.dim(), &cols);
    let rank_xi = xi.rank();
    let mut counterexample = None;
    if rank_xi < small.dim() {
        counterexample = kernel_basis(&xi).basis_vectors().into_iter().next();
    } else if rank_xi < large.dim() {
        let image = Subspace::span(field, large.dim(), &cols);
        counterexample = (0..large.dim())
            .map(|k| {
                let mut e = vec![field.zero(); large.dim()];
                e[k] = field.one();
                e
            })
            .find(|e| !image.contains(e));
    }
    // every class of the full coend is reached through its decomposition
    for k in 0..large.dim() {
        let (slot, psi) = large.representative(k);
        let via = small.class_of(&slot, &psi)?;
        let back = xi.mul_vec(&via);
        if counterexample.is_none()
            && back
                != large
                    .result
                    .quotient
                    .project(&large.result.quotient.representative(k))
        {
            counterexample = Some(
                large
                    .result
                    .quotient
                    .project(&large.result.quotient.representative(k)),
            );
        }
    }
    Ok(ClosureVerdict {
        dim_generators: small.dim(),
        dim_full: large.dim(),
        rank_xi,
        counterexample,
    })
}
