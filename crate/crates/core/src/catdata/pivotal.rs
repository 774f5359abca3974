use std::fmt::Debug;
use std::hash::Hash;

use crate::exactla::{Field, Scalar};

/// A strict pivotal linear category with finite-dimensional hom spaces and
/// chosen, deterministic hom bases.
///
/// Duality data follows the convention
/// `ev_X : X*⊗X → 1`, `coev_X : 1 → X⊗X*`,
/// `ẽv_X : X⊗X* → 1`, `c̃oev_X : 1 → X*⊗X`.
pub trait Pivotal {
    type Obj: Clone + Eq + Hash + Debug;
    type Mor: Clone + Debug;

    fn field(&self) -> Field;
    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn dual_obj(&self, a: &Self::Obj) -> Self::Obj;
    fn obj_name(&self, a: &Self::Obj) -> String;

    fn src(&self, f: &Self::Mor) -> Self::Obj;
    fn dst(&self, f: &Self::Mor) -> Self::Obj;

    fn hom_dim(&self, a: &Self::Obj, b: &Self::Obj) -> usize;
    fn hom_basis(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;
    /// Coordinates of `f` in `hom_basis(src f, dst f)`.
    fn coords(&self, f: &Self::Mor) -> Vec<Scalar>;
    fn from_coords(&self, a: &Self::Obj, b: &Self::Obj, c: &[Scalar]) -> Self::Mor;
    /// A faithful linear embedding of `Hom(a, b)` into a coordinate space whose
    /// length depends only on `(a, b)`. Used to compare and solve for morphisms
    /// without computing hom bases.
    fn embed(&self, f: &Self::Mor) -> Vec<Scalar>;

    fn identity(&self, a: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`; panics if `dst f ≠ src g`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// `Σ cᵢ·fᵢ` in `Hom(a, b)`.
    fn lin(&self, a: &Self::Obj, b: &Self::Obj, terms: &[(Scalar, &Self::Mor)]) -> Self::Mor;

    fn ev(&self, a: &Self::Obj) -> Self::Mor;
    fn coev(&self, a: &Self::Obj) -> Self::Mor;
    fn ev_tilde(&self, a: &Self::Obj) -> Self::Mor;
    fn coev_tilde(&self, a: &Self::Obj) -> Self::Mor;

    /// Whether `f` actually lies in its hom space (always true for presentations
    /// by coordinates; checked for concrete models).
    fn is_morphism(&self, _f: &Self::Mor) -> bool {
        true
    }

    /// Whether `(a⊗b)* = b*⊗a*` holds strictly, with the canonical comparison
    /// being the identity.
    fn strict_dual_of_tensor(&self, a: &Self::Obj, b: &Self::Obj) -> bool {
        let ab = self.tensor_obj(a, b);
        self.dual_obj(&ab) == self.tensor_obj(&self.dual_obj(b), &self.dual_obj(a))
    }

    // ---- provided ----

    fn zero_mor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        self.lin(a, b, &[])
    }

    fn add_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        let one = self.field().one();
        self.lin(&self.src(f), &self.dst(f), &[(one.clone(), f), (one, g)])
    }

    fn sub_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        let k = self.field();
        self.lin(&self.src(f), &self.dst(f), &[(k.one(), f), (k.int(-1), g)])
    }

    fn scale_mor(&self, s: &Scalar, f: &Self::Mor) -> Self::Mor {
        self.lin(&self.src(f), &self.dst(f), &[(s.clone(), f)])
    }

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.src(f) == self.src(g) && self.dst(f) == self.dst(g) && self.embed(f) == self.embed(g)
    }

    fn is_zero_mor(&self, f: &Self::Mor) -> bool {
        self.embed(f).iter().all(|x| x.is_zero())
    }

    /// Left-to-right tensor product of a list of objects (unit if empty).
    fn tensor_all(&self, objs: &[Self::Obj]) -> Self::Obj {
        objs.iter()
            .fold(self.unit(), |acc, o| self.tensor_obj(&acc, o))
    }

    fn tensor_mor_all(&self, fs: &[Self::Mor]) -> Self::Mor {
        fs.iter().fold(self.identity(&self.unit()), |acc, f| {
            self.tensor_mor(&acc, f)
        })
    }

    fn compose_all(&self, fs_last_first: &[Self::Mor]) -> Self::Mor {
        let mut it = fs_last_first.iter().rev();
        let first = it.next().expect("nonempty composite").clone();
        it.fold(first, |acc, g| self.compose(g, &acc))
    }
}
