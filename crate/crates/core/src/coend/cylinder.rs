use std::collections::HashMap;
use std::sync::Mutex;

use crate::catdata::{sum_witness, Pivotal, SumWitness};
use crate::coend::bifunctor::{coend_unchecked, BasisAction, BifunctorPresentation, CoendResult};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

/// Default cap on the ambient dimension `Σₖ dim F(k, k)` of a coend.
pub const DEFAULT_BUDGET: usize = 20_000;

/// The bifunctor `F(a, b) = Hom(a ⊗ V, W ⊗ b)`; `V = W = 1` gives the Hom
/// bifunctor.
pub struct CylinderFunctor<'a, C: Pivotal> {
    pub cat: &'a C,
    pub v: C::Obj,
    pub w: C::Obj,
}

impl<'a, C: Pivotal> CylinderFunctor<'a, C> {
    pub fn new(cat: &'a C, v: C::Obj, w: C::Obj) -> Self {
        CylinderFunctor { cat, v, w }
    }

    pub fn hom(cat: &'a C) -> Self {
        let u = cat.unit();
        CylinderFunctor {
            cat,
            v: u.clone(),
            w: u,
        }
    }

    pub fn src(&self, a: &C::Obj) -> C::Obj {
        self.cat.tensor_obj(a, &self.v)
    }

    pub fn dst(&self, b: &C::Obj) -> C::Obj {
        self.cat.tensor_obj(&self.w, b)
    }

    pub fn dim(&self, a: &C::Obj, b: &C::Obj) -> usize {
        self.cat.hom_dim(&self.src(a), &self.dst(b))
    }

    /// `(id_W ⊗ f) ∘ ψ` for `ψ ∈ F(a, i)`, `f : i → j`.
    pub fn act_left(&self, f: &C::Mor, psi: &C::Mor) -> C::Mor {
        let c = self.cat;
        c.compose(&c.tensor_mor(&c.identity(&self.w), f), psi)
    }

    /// `ψ ∘ (f ⊗ id_V)` for `ψ ∈ F(j, b)`, `f : i → j`.
    pub fn act_right(&self, f: &C::Mor, psi: &C::Mor) -> C::Mor {
        let c = self.cat;
        c.compose(psi, &c.tensor_mor(f, &c.identity(&self.v)))
    }

    fn matrix(&self, basis: &[C::Mor], rows: usize, image: impl Fn(&C::Mor) -> C::Mor) -> Matrix {
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| self.cat.coords(&image(b))).collect();
        Matrix::from_columns(self.cat.field(), rows, &cols)
    }

    /// Presentation over `objs`. Full action matrices are only assembled when
    /// `full` is set (needed for the functoriality check); otherwise just the
    /// blocks that enter the coend relations are filled and the rest are empty.
    pub fn present(
        &self,
        objs: &[C::Obj],
        full: bool,
        budget: usize,
    ) -> Result<BifunctorPresentation> {
        let c = self.cat;
        let n = objs.len();
        let dims: Vec<Vec<usize>> = objs
            .iter()
            .map(|a| objs.iter().map(|b| self.dim(a, b)).collect())
            .collect();
        let ambient: usize = (0..n).map(|k| dims[k][k]).sum();
        if ambient > budget {
            return Err(Error::Budget(format!(
                "coend over {n} objects has ambient dimension {ambient}, budget is {budget}"
            )));
        }
        let bases: Vec<Vec<Vec<C::Mor>>> = objs
            .iter()
            .map(|a| {
                objs.iter()
                    .map(|b| c.hom_basis(&self.src(a), &self.dst(b)))
                    .collect()
            })
            .collect();
        let empty = Matrix::zeros(c.field(), 0, 0);
        let mut homs = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for f in c.hom_basis(&objs[i], &objs[j]) {
                    let mut left = vec![empty.clone(); n];
                    let mut right = vec![empty.clone(); n];
                    for a in 0..n {
                        if full || a == j {
                            left[a] =
                                self.matrix(&bases[a][i], dims[a][j], |p| self.act_left(&f, p));
                        }
                        if full || a == i {
                            right[a] =
                                self.matrix(&bases[j][a], dims[i][a], |p| self.act_right(&f, p));
                        }
                    }
                    homs[i][j].push(BasisAction { left, right });
                }
            }
        }
        let identity = objs.iter().map(|a| c.coords(&c.identity(a))).collect();
        let mut compose = Vec::new();
        if full {
            compose = vec![vec![vec![Vec::new(); n]; n]; n];
            for i in 0..n {
                for j in 0..n {
                    let fs = c.hom_basis(&objs[i], &objs[j]);
                    for k in 0..n {
                        let gs = c.hom_basis(&objs[j], &objs[k]);
                        compose[i][j][k] = gs
                            .iter()
                            .map(|g| fs.iter().map(|f| c.coords(&c.compose(g, f))).collect())
                            .collect();
                    }
                }
            }
        }
        Ok(BifunctorPresentation {
            field: c.field(),
            labels: objs.iter().map(|o| c.obj_name(o)).collect(),
            dims,
            homs,
            identity,
            compose,
        })
    }
}

/// A coend of a cylinder bifunctor over a finite object list, able to name the
/// class of `ψ ∈ F(Z, Z)` for objects `Z` outside the list through direct-sum
/// witnesses.
pub struct CylinderCoend<'a, C: Pivotal> {
    pub functor: CylinderFunctor<'a, C>,
    pub objs: Vec<C::Obj>,
    pub result: CoendResult,
    witnesses: Mutex<HashMap<C::Obj, Option<SumWitness<C>>>>,
}

impl<'a, C: Pivotal> CylinderCoend<'a, C> {
    pub fn new(functor: CylinderFunctor<'a, C>, objs: &[C::Obj], budget: usize) -> Result<Self> {
        let p = functor.present(objs, false, budget)?;
        let result = coend_unchecked(&p);
        Ok(CylinderCoend {
            functor,
            objs: objs.to_vec(),
            result,
            witnesses: Mutex::new(HashMap::new()),
        })
    }

    /// Like [`new`](Self::new), but first verifies functoriality on all basis morphisms.
    pub fn checked(
        functor: CylinderFunctor<'a, C>,
        objs: &[C::Obj],
        budget: usize,
    ) -> Result<Self> {
        functor.present(objs, true, budget)?.check_functoriality()?;
        Self::new(functor, objs, budget)
    }

    pub fn dim(&self) -> usize {
        self.result.dim()
    }

    fn position(&self, z: &C::Obj) -> Option<usize> {
        self.objs.iter().position(|o| o == z)
    }

    pub fn witness(&self, z: &C::Obj) -> Option<SumWitness<C>> {
        if let Some(w) = self.witnesses.lock().unwrap().get(z) {
            return w.clone();
        }
        let w = sum_witness(self.functor.cat, z, &self.objs);
        self.witnesses.lock().unwrap().insert(z.clone(), w.clone());
        w
    }

    /// Ambient vector of the class of `ψ ∈ F(z, z)`.
    pub fn ambient_of(&self, z: &C::Obj, psi: &C::Mor) -> Result<Vec<Scalar>> {
        let c = self.functor.cat;
        if let Some(k) = self.position(z) {
            return Ok(self.result.leg(k, &c.coords(psi)));
        }
        let w = self.witness(z).ok_or_else(|| {
            Error::MissingWitness(format!(
                "{} is not a retract of a sum of listed objects",
                c.obj_name(z)
            ))
        })?;
        let mut acc = vec![c.field().zero(); self.result.ambient_dim()];
        for leg in &w.legs {
            let k = self
                .position(&leg.through)
                .expect("witness legs run through listed objects");
            // [ψ] = Σ [ (inc ▷)(proj ▷ ψ) ] = Σ [ (proj ▷ ψ) ◁ inc ]
            let moved = self
                .functor
                .act_right(&leg.inc, &self.functor.act_left(&leg.proj, psi));
            for (a, b) in acc.iter_mut().zip(self.result.leg(k, &c.coords(&moved))) {
                *a = &*a + &b;
            }
        }
        Ok(acc)
    }

    /// Quotient coordinates of `[ψ]` for `ψ ∈ F(z, z)`.
    pub fn class_of(&self, z: &C::Obj, psi: &C::Mor) -> Result<Vec<Scalar>> {
        Ok(self.result.quotient.project(&self.ambient_of(z, psi)?))
    }

    /// A representative `(slot, ψ)` of quotient basis vector `k`.
    pub fn representative(&self, k: usize) -> (C::Obj, C::Mor) {
        let c = self.functor.cat;
        let pos = self.result.quotient.rep_basis()[k];
        let slot = (0..self.objs.len())
            .rev()
            .find(|&s| self.result.offsets[s] <= pos)
            .expect("offsets start at zero");
        let o = &self.objs[slot];
        let (src, dst) = (self.functor.src(o), self.functor.dst(o));
        let mut coeffs = vec![c.field().zero(); c.hom_dim(&src, &dst)];
        coeffs[pos - self.result.offsets[slot]] = c.field().one();
        (o.clone(), c.from_coords(&src, &dst, &coeffs))
    }
}

/// `∫^{X ∈ T} Hom(X ⊗ V, W ⊗ X)`.
pub fn cylinder_hom<'a, C: Pivotal>(
    c: &'a C,
    t: &[C::Obj],
    v: &C::Obj,
    w: &C::Obj,
    budget: usize,
) -> Result<CylinderCoend<'a, C>> {
    CylinderCoend::new(CylinderFunctor::new(c, v.clone(), w.clone()), t, budget)
}

/// Hom spaces of the horizontal trace of the regular bimodule restricted to the
/// acting list: `∫^{X} Hom(X ▷ B₁, B₂ ◁ X)`.
pub fn htr_hom<'a, C: Pivotal>(
    c: &'a C,
    acting: &[C::Obj],
    b1: &C::Obj,
    b2: &C::Obj,
    budget: usize,
) -> Result<CylinderCoend<'a, C>> {
    cylinder_hom(c, acting, b1, b2, budget)
}

/// `[ψ₂] ∘ [ψ₁] = [(ψ₂ ⊗ id_X) ∘ (id_Y ⊗ ψ₁)]` for `ψ₁ ∈ Hom(X⊗B₁, B₂⊗X)` and
/// `ψ₂ ∈ Hom(Y⊗B₂, B₃⊗Y)`, landing in the slot `Y⊗X` of `target`.
pub fn htr_compose<C: Pivotal>(
    target: &CylinderCoend<'_, C>,
    x: &C::Obj,
    psi1: &C::Mor,
    y: &C::Obj,
    psi2: &C::Mor,
) -> Result<Vec<Scalar>> {
    let c = target.functor.cat;
    let step1 = c.tensor_mor(&c.identity(y), psi1);
    let step2 = c.tensor_mor(psi2, &c.identity(x));
    let total = c.compose(&step2, &step1);
    target.class_of(&c.tensor_obj(y, x), &total)
}
