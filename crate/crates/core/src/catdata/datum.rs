//! Strict skeletal pivotal categories presented by structure constants.

use serde::{Deserialize, Serialize};

use crate::catdata::pivotal::Pivotal;
use crate::error::{Error, Result};
use crate::exactla::{lin_comb, Field, Scalar};

pub type ObjectId = usize;

/// A morphism given by its coefficients in the chosen hom basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MorphismVec {
    pub src: ObjectId,
    pub dst: ObjectId,
    pub coeffs: Vec<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubcategoryRole {
    Admissibility,
    CoendScope,
    Ideal,
}

/// A full subcategory, given by its objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubcategorySpec<O = ObjectId> {
    pub name: String,
    pub role: SubcategoryRole,
    pub members: Vec<O>,
}

impl<O: PartialEq + Clone> SubcategorySpec<O> {
    pub fn new(name: &str, role: SubcategoryRole, members: Vec<O>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Invalid(format!("subcategory {name} is empty")));
        }
        Ok(SubcategorySpec {
            name: name.to_string(),
            role,
            members,
        })
    }

    pub fn contains(&self, o: &O) -> bool {
        self.members.contains(o)
    }
}

/// Strict skeletal pivotal category: associators and unitors are identities and
/// `X** = X` on indices.
///
/// Structure constants are stored densely per index tuple:
/// * `compose[(a,b,c)]` is laid out `[g][f][k]` for `g ∈ Hom(b,c)`, `f ∈ Hom(a,b)`,
///   `k` indexing `Hom(a,c)`;
/// * `tensor_mor[(i,i′,j,j′)]` is laid out `[f][g][k]` for `f ∈ Hom(i,i′)`,
///   `g ∈ Hom(j,j′)`, `k` indexing `Hom(i⊗j, i′⊗j′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryDatum {
    pub name: String,
    pub field: Field,
    pub objects: Vec<String>,
    pub unit: ObjectId,
    pub dual: Vec<ObjectId>,
    pub tensor: Vec<Vec<ObjectId>>,
    pub hom_dims: Vec<Vec<usize>>,
    pub compose: Vec<Vec<Scalar>>,
    pub tensor_mor: Vec<Vec<Scalar>>,
    pub id_vec: Vec<Vec<Scalar>>,
    pub ev: Vec<Vec<Scalar>>,
    pub coev: Vec<Vec<Scalar>>,
    pub ev_tilde: Vec<Vec<Scalar>>,
    pub coev_tilde: Vec<Vec<Scalar>>,
    pub subcategories: Vec<SubcategorySpec>,
}

impl CategoryDatum {
    pub fn n(&self) -> usize {
        self.objects.len()
    }

    pub(crate) fn triple(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.n();
        (a * n + b) * n + c
    }

    pub(crate) fn quad(&self, i: usize, i2: usize, j: usize, j2: usize) -> usize {
        let n = self.n();
        ((i * n + i2) * n + j) * n + j2
    }

    /// An empty datum with zero structure constants of the right shapes.
    pub fn skeleton(
        name: &str,
        field: Field,
        objects: Vec<String>,
        unit: ObjectId,
        dual: Vec<ObjectId>,
        tensor: Vec<Vec<ObjectId>>,
        hom_dims: Vec<Vec<usize>>,
    ) -> CategoryDatum {
        let n = objects.len();
        let z = field.zero();
        let h = |a: usize, b: usize| hom_dims[a][b];
        let mut compose = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    compose.push(vec![z.clone(); h(b, c) * h(a, b) * h(a, c)]);
                }
            }
        }
        let mut tensor_mor = Vec::with_capacity(n * n * n * n);
        for i in 0..n {
            for i2 in 0..n {
                for j in 0..n {
                    for j2 in 0..n {
                        let k = h(tensor[i][j], tensor[i2][j2]);
                        tensor_mor.push(vec![z.clone(); h(i, i2) * h(j, j2) * k]);
                    }
                }
            }
        }
        let id_vec = (0..n).map(|a| vec![z.clone(); h(a, a)]).collect();
        let ev = (0..n)
            .map(|a| vec![z.clone(); h(tensor[dual[a]][a], unit)])
            .collect();
        let coev = (0..n)
            .map(|a| vec![z.clone(); h(unit, tensor[a][dual[a]])])
            .collect();
        let ev_tilde = (0..n)
            .map(|a| vec![z.clone(); h(tensor[a][dual[a]], unit)])
            .collect();
        let coev_tilde = (0..n)
            .map(|a| vec![z.clone(); h(unit, tensor[dual[a]][a])])
            .collect();
        CategoryDatum {
            name: name.to_string(),
            field,
            objects,
            unit,
            dual,
            tensor,
            hom_dims,
            compose,
            tensor_mor,
            id_vec,
            ev,
            coev,
            ev_tilde,
            coev_tilde,
            subcategories: Vec::new(),
        }
    }

    pub fn object_index(&self, name: &str) -> Option<ObjectId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn subcategory(&self, name: &str) -> Option<&SubcategorySpec> {
        self.subcategories.iter().find(|s| s.name == name)
    }

    pub fn all_objects(&self) -> Vec<ObjectId> {
        (0..self.n()).collect()
    }

    pub fn basis_vec(&self, a: ObjectId, b: ObjectId, k: usize) -> MorphismVec {
        let mut coeffs = vec![self.field.zero(); self.hom_dims[a][b]];
        coeffs[k] = self.field.one();
        MorphismVec {
            src: a,
            dst: b,
            coeffs,
        }
    }

    /// Structural consistency: index ranges, table shapes, scalar fields.
    pub fn check_shapes(&self) -> Result<()> {
        let n = self.n();
        let bad = |m: String| Err(Error::Shape(m));
        if n == 0 {
            return bad("no objects".into());
        }
        if self.unit >= n {
            return bad(format!("unit index {} out of range", self.unit));
        }
        if self.dual.len() != n || self.dual.iter().any(|&d| d >= n) {
            return bad("dual table has wrong length or out-of-range entries".into());
        }
        if self.tensor.len() != n
            || self
                .tensor
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&t| t >= n))
        {
            return bad("tensor table is not n×n with valid entries".into());
        }
        if self.hom_dims.len() != n || self.hom_dims.iter().any(|r| r.len() != n) {
            return bad("hom_dims is not n×n".into());
        }
        if self.compose.len() != n * n * n || self.tensor_mor.len() != n * n * n * n {
            return bad("structure-constant table count mismatch".into());
        }
        let h = |a: usize, b: usize| self.hom_dims[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.compose[self.triple(a, b, c)].len() != h(b, c) * h(a, b) * h(a, c) {
                        return bad(format!(
                            "compose constants for ({a},{b},{c}) have wrong size"
                        ));
                    }
                }
            }
        }
        for i in 0..n {
            for i2 in 0..n {
                for j in 0..n {
                    for j2 in 0..n {
                        let k = h(self.tensor[i][j], self.tensor[i2][j2]);
                        if self.tensor_mor[self.quad(i, i2, j, j2)].len() != h(i, i2) * h(j, j2) * k
                        {
                            return bad(format!(
                                "tensor constants for ({i},{i2},{j},{j2}) have wrong size"
                            ));
                        }
                    }
                }
            }
        }
        let d = &self.dual;
        let t = &self.tensor;
        let u = self.unit;
        for a in 0..n {
            let expect = [
                ("identity", self.id_vec[a].len(), h(a, a)),
                ("ev", self.ev[a].len(), h(t[d[a]][a], u)),
                ("coev", self.coev[a].len(), h(u, t[a][d[a]])),
                ("ev_tilde", self.ev_tilde[a].len(), h(t[a][d[a]], u)),
                ("coev_tilde", self.coev_tilde[a].len(), h(u, t[d[a]][a])),
            ];
            for (what, got, want) in expect {
                if got != want {
                    return bad(format!(
                        "{what} vector of object {} has length {got}, expected {want}",
                        self.objects[a]
                    ));
                }
            }
        }
        for s in &self.subcategories {
            if s.members.is_empty() || s.members.iter().any(|&m| m >= n) {
                return bad(format!(
                    "subcategory {} is empty or has invalid members",
                    s.name
                ));
            }
        }
        let all_scalars = self
            .compose
            .iter()
            .chain(&self.tensor_mor)
            .chain(&self.id_vec)
            .chain(&self.ev)
            .chain(&self.coev)
            .chain(&self.ev_tilde)
            .chain(&self.coev_tilde)
            .flatten();
        for s in all_scalars {
            if !self.field.contains(s) {
                return bad(format!("scalar {s} is not in field {}", self.field));
            }
        }
        Ok(())
    }
}

impl Pivotal for CategoryDatum {
    type Obj = ObjectId;
    type Mor = MorphismVec;

    fn field(&self) -> Field {
        self.field
    }

    fn unit(&self) -> ObjectId {
        self.unit
    }

    fn tensor_obj(&self, a: &ObjectId, b: &ObjectId) -> ObjectId {
        self.tensor[*a][*b]
    }

    fn dual_obj(&self, a: &ObjectId) -> ObjectId {
        self.dual[*a]
    }

    fn obj_name(&self, a: &ObjectId) -> String {
        self.objects[*a].clone()
    }

    fn src(&self, f: &MorphismVec) -> ObjectId {
        f.src
    }

    fn dst(&self, f: &MorphismVec) -> ObjectId {
        f.dst
    }

    fn hom_dim(&self, a: &ObjectId, b: &ObjectId) -> usize {
        self.hom_dims[*a][*b]
    }

    fn hom_basis(&self, a: &ObjectId, b: &ObjectId) -> Vec<MorphismVec> {
        (0..self.hom_dims[*a][*b])
            .map(|k| self.basis_vec(*a, *b, k))
            .collect()
    }

    fn coords(&self, f: &MorphismVec) -> Vec<Scalar> {
        f.coeffs.clone()
    }

    fn from_coords(&self, a: &ObjectId, b: &ObjectId, c: &[Scalar]) -> MorphismVec {
        assert_eq!(c.len(), self.hom_dims[*a][*b], "coefficient length");
        MorphismVec {
            src: *a,
            dst: *b,
            coeffs: c.to_vec(),
        }
    }

    fn embed(&self, f: &MorphismVec) -> Vec<Scalar> {
        f.coeffs.clone()
    }

    fn identity(&self, a: &ObjectId) -> MorphismVec {
        MorphismVec {
            src: *a,
            dst: *a,
            coeffs: self.id_vec[*a].clone(),
        }
    }

    fn compose(&self, g: &MorphismVec, f: &MorphismVec) -> MorphismVec {
        assert_eq!(f.dst, g.src, "composing non-composable morphisms");
        let (a, b, c) = (f.src, f.dst, g.dst);
        let hab = self.hom_dims[a][b];
        let hac = self.hom_dims[a][c];
        let table = &self.compose[self.triple(a, b, c)];
        let mut out = vec![self.field.zero(); hac];
        for (gi, gc) in g.coeffs.iter().enumerate() {
            if gc.is_zero() {
                continue;
            }
            for (fi, fc) in f.coeffs.iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                let w = gc * fc;
                let base = (gi * hab + fi) * hac;
                for (k, o) in out.iter_mut().enumerate() {
                    let t = &table[base + k];
                    if !t.is_zero() {
                        *o = &*o + &(&w * t);
                    }
                }
            }
        }
        MorphismVec {
            src: a,
            dst: c,
            coeffs: out,
        }
    }

    fn tensor_mor(&self, f: &MorphismVec, g: &MorphismVec) -> MorphismVec {
        let (i, i2, j, j2) = (f.src, f.dst, g.src, g.dst);
        let hjj = self.hom_dims[j][j2];
        let (s, t) = (self.tensor[i][j], self.tensor[i2][j2]);
        let hk = self.hom_dims[s][t];
        let table = &self.tensor_mor[self.quad(i, i2, j, j2)];
        let mut out = vec![self.field.zero(); hk];
        for (fi, fc) in f.coeffs.iter().enumerate() {
            if fc.is_zero() {
                continue;
            }
            for (gi, gc) in g.coeffs.iter().enumerate() {
                if gc.is_zero() {
                    continue;
                }
                let w = fc * gc;
                let base = (fi * hjj + gi) * hk;
                for (k, o) in out.iter_mut().enumerate() {
                    let x = &table[base + k];
                    if !x.is_zero() {
                        *o = &*o + &(&w * x);
                    }
                }
            }
        }
        MorphismVec {
            src: s,
            dst: t,
            coeffs: out,
        }
    }

    fn lin(&self, a: &ObjectId, b: &ObjectId, terms: &[(Scalar, &MorphismVec)]) -> MorphismVec {
        let len = self.hom_dims[*a][*b];
        let vs: Vec<(Scalar, &[Scalar])> = terms
            .iter()
            .map(|(c, f)| {
                assert!(
                    f.src == *a && f.dst == *b,
                    "linear combination across hom spaces"
                );
                (c.clone(), f.coeffs.as_slice())
            })
            .collect();
        MorphismVec {
            src: *a,
            dst: *b,
            coeffs: lin_comb(self.field, len, &vs),
        }
    }

    fn ev(&self, a: &ObjectId) -> MorphismVec {
        MorphismVec {
            src: self.tensor[self.dual[*a]][*a],
            dst: self.unit,
            coeffs: self.ev[*a].clone(),
        }
    }

    fn coev(&self, a: &ObjectId) -> MorphismVec {
        MorphismVec {
            src: self.unit,
            dst: self.tensor[*a][self.dual[*a]],
            coeffs: self.coev[*a].clone(),
        }
    }

    fn ev_tilde(&self, a: &ObjectId) -> MorphismVec {
        MorphismVec {
            src: self.tensor[*a][self.dual[*a]],
            dst: self.unit,
            coeffs: self.ev_tilde[*a].clone(),
        }
    }

    fn coev_tilde(&self, a: &ObjectId) -> MorphismVec {
        MorphismVec {
            src: self.unit,
            dst: self.tensor[self.dual[*a]][*a],
            coeffs: self.coev_tilde[*a].clone(),
        }
    }
}
