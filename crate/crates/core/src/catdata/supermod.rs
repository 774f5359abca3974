//! Finite-dimensional super modules over an exterior algebra `Λ(W)` with odd
//! generators, and even intertwiners between them.
//!
//! Modules are concrete: a parity per basis vector and one odd action matrix per
//! generator. The tensor product uses the Koszul sign rule
//! `g·(v⊗w) = gv⊗w + (−1)^{|v|} v⊗gw`, so it is strictly associative and unital on
//! the nose. Duals use the antipode `S(g) = −g` and the sign-twisted transpose.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::catdata::datum::{CategoryDatum, MorphismVec, SubcategoryRole, SubcategorySpec};
use crate::catdata::pivotal::Pivotal;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Field, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperModule {
    /// Parity (0 even, 1 odd) of each basis vector.
    pub parity: Vec<u8>,
    /// Action matrix of each odd generator.
    pub actions: Vec<Matrix>,
}

impl SuperModule {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// The grading operator `diag((−1)^{|i|})`.
    pub fn grading(&self, field: Field) -> Matrix {
        let mut p = Matrix::zeros(field, self.dim(), self.dim());
        for (i, &q) in self.parity.iter().enumerate() {
            p.set(i, i, field.int(if q == 0 { 1 } else { -1 }));
        }
        p
    }

    pub fn superdim(&self, field: Field) -> Scalar {
        let even = self.parity.iter().filter(|&&q| q == 0).count() as i64;
        field.int(2 * even - self.dim() as i64)
    }
}

/// An even module map, as a `dim(dst) × dim(src)` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMor {
    pub src: ModId,
    pub dst: ModId,
    pub mat: Matrix,
}

struct HomData {
    basis: Vec<Matrix>,
    /// Flat matrix positions whose entries are the coordinates in `basis`.
    coord_positions: Vec<usize>,
}

#[derive(Default)]
struct Registry {
    modules: Vec<SuperModule>,
    names: Vec<String>,
    index: HashMap<SuperModule, ModId>,
    homs: HashMap<(ModId, ModId), Arc<HomData>>,
    tensors: HashMap<(ModId, ModId), ModId>,
    duals: HashMap<ModId, ModId>,
}

/// The category of finite-dimensional super modules over `Λ⟨generators⟩` with
/// even morphisms. Objects are interned: equal modules get equal ids.
pub struct SuperModCategory {
    field: Field,
    generators: Vec<String>,
    reg: Mutex<Registry>,
    unit: ModId,
}

fn wrap(name: &str) -> String {
    if name.contains('⊗') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

impl SuperModCategory {
    pub fn new(field: Field, generators: &[&str]) -> SuperModCategory {
        let mut reg = Registry::default();
        let unit = SuperModule {
            parity: vec![0],
            actions: vec![Matrix::zeros(field, 1, 1); generators.len()],
        };
        reg.modules.push(unit.clone());
        reg.names.push("1".into());
        reg.index.insert(unit, ModId(0));
        SuperModCategory {
            field,
            generators: generators.iter().map(|s| s.to_string()).collect(),
            reg: Mutex::new(reg),
            unit: ModId(0),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn module(&self, id: ModId) -> SuperModule {
        self.reg.lock().unwrap().modules[id.0].clone()
    }

    pub fn name(&self, id: ModId) -> String {
        self.reg.lock().unwrap().names[id.0].clone()
    }

    pub fn find(&self, name: &str) -> Option<ModId> {
        let reg = self.reg.lock().unwrap();
        reg.names.iter().position(|n| n == name).map(ModId)
    }

    fn intern(&self, m: SuperModule, name: impl FnOnce() -> String) -> ModId {
        let mut reg = self.reg.lock().unwrap();
        if let Some(&id) = reg.index.get(&m) {
            return id;
        }
        let id = ModId(reg.modules.len());
        reg.modules.push(m.clone());
        reg.names.push(name());
        reg.index.insert(m, id);
        id
    }

    /// Registers a module after checking it is a super module over the exterior
    /// algebra. A module equal to a registered one takes the new name.
    pub fn add_module(&self, name: &str, m: SuperModule) -> Result<ModId> {
        self.check_module(&m)?;
        let id = self.intern(m, || name.to_string());
        self.reg.lock().unwrap().names[id.0] = name.to_string();
        Ok(id)
    }

    fn check_module(&self, m: &SuperModule) -> Result<()> {
        let d = m.dim();
        if m.parity.iter().any(|&p| p > 1) {
            return Err(Error::Module("parities must be 0 or 1".into()));
        }
        if m.actions.len() != self.generators.len() {
            return Err(Error::Module(format!(
                "expected {} action matrices, got {}",
                self.generators.len(),
                m.actions.len()
            )));
        }
        for (g, a) in self.generators.iter().zip(&m.actions) {
            if a.rows() != d || a.cols() != d || a.field() != self.field {
                return Err(Error::Module(format!(
                    "action of {g} has wrong shape or field"
                )));
            }
            for i in 0..d {
                for j in 0..d {
                    if m.parity[i] == m.parity[j] && !a.get(i, j).is_zero() {
                        return Err(Error::Module(format!("action of {g} is not odd")));
                    }
                }
            }
        }
        for (i, a) in m.actions.iter().enumerate() {
            for (j, b) in m.actions.iter().enumerate().skip(i) {
                if !a.mul(b).add(&b.mul(a)).is_zero() {
                    return Err(Error::Module(format!(
                        "generators {} and {} do not anticommute",
                        self.generators[i], self.generators[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The free module of rank one, with the monomial basis ordered by bitmask.
    pub fn free_module(&self) -> SuperModule {
        let k = self.generators.len();
        let d = 1usize << k;
        let parity = (0..d).map(|m: usize| (m.count_ones() % 2) as u8).collect();
        let actions = (0..k)
            .map(|i| {
                let mut a = Matrix::zeros(self.field, d, d);
                for m in 0..d {
                    if m & (1 << i) != 0 {
                        continue;
                    }
                    let before = (m & ((1 << i) - 1)).count_ones();
                    let s = if before % 2 == 0 { 1 } else { -1 };
                    a.set(m | (1 << i), m, self.field.int(s));
                }
                a
            })
            .collect();
        SuperModule { parity, actions }
    }

    pub fn parity_shift(&self, m: &SuperModule) -> SuperModule {
        SuperModule {
            parity: m.parity.iter().map(|p| 1 - p).collect(),
            actions: m.actions.clone(),
        }
    }

    /// One-dimensional trivial module of the given parity.
    pub fn trivial_module(&self, parity: u8) -> SuperModule {
        SuperModule {
            parity: vec![parity],
            actions: vec![Matrix::zeros(self.field, 1, 1); self.generators.len()],
        }
    }

    pub fn direct_sum(&self, a: &SuperModule, b: &SuperModule) -> SuperModule {
        let mut parity = a.parity.clone();
        parity.extend(&b.parity);
        let actions = a
            .actions
            .iter()
            .zip(&b.actions)
            .map(|(x, y)| x.block_diag(y))
            .collect();
        SuperModule { parity, actions }
    }

    /// Registers `1`, `Pi1`, `Lambda` (free of rank one) and `PiLambda`.
    pub fn standard_objects(&self) -> Vec<ModId> {
        let free = self.free_module();
        let pi_free = self.parity_shift(&free);
        vec![
            self.unit,
            self.add_module("Pi1", self.trivial_module(1))
                .expect("valid module"),
            self.add_module("Lambda", free).expect("valid module"),
            self.add_module("PiLambda", pi_free).expect("valid module"),
        ]
    }

    fn hom_data(&self, a: ModId, b: ModId) -> Arc<HomData> {
        if let Some(h) = self.reg.lock().unwrap().homs.get(&(a, b)) {
            return h.clone();
        }
        let (va, vb) = (self.module(a), self.module(b));
        let data = Arc::new(self.solve_hom(&va, &vb));
        self.reg.lock().unwrap().homs.insert((a, b), data.clone());
        data
    }

    /// Even intertwiners `V → W`: unknowns are the even entries of `M`, equations
    /// `M·A_g^V = A_g^W·M` for every generator.
    fn solve_hom(&self, v: &SuperModule, w: &SuperModule) -> HomData {
        let (dv, dw) = (v.dim(), w.dim());
        let f = self.field;
        let mut unknown_of = vec![usize::MAX; dw * dv];
        let mut positions = Vec::new();
        for i in 0..dw {
            for j in 0..dv {
                if w.parity[i] == v.parity[j] {
                    unknown_of[i * dv + j] = positions.len();
                    positions.push(i * dv + j);
                }
            }
        }
        let nu = positions.len();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (av, aw) in v.actions.iter().zip(&w.actions) {
            for i in 0..dw {
                for j in 0..dv {
                    if w.parity[i] == v.parity[j] {
                        continue;
                    }
                    let mut row = vec![f.zero(); nu];
                    let mut any = false;
                    for k in 0..dv {
                        let x = av.get(k, j);
                        if !x.is_zero() && unknown_of[i * dv + k] != usize::MAX {
                            let u = unknown_of[i * dv + k];
                            row[u] = &row[u] + x;
                            any = true;
                        }
                    }
                    for k in 0..dw {
                        let x = aw.get(i, k);
                        if !x.is_zero() && unknown_of[k * dv + j] != usize::MAX {
                            let u = unknown_of[k * dv + j];
                            row[u] = &row[u] - x;
                            any = true;
                        }
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        let eqs = if rows.is_empty() {
            Matrix::zeros(f, 0, nu)
        } else {
            Matrix::from_rows(f, rows).expect("equal-length rows")
        };
        let ker = kernel_basis(&eqs);
        let basis = ker
            .basis_vectors()
            .into_iter()
            .map(|u| {
                let mut m = Matrix::zeros(f, dw, dv);
                for (x, &p) in u.into_iter().zip(&positions) {
                    m.set(p / dv, p % dv, x);
                }
                m
            })
            .collect();
        let coord_positions = ker.pivots().iter().map(|&p| positions[p]).collect();
        HomData {
            basis,
            coord_positions,
        }
    }

    pub fn mor(&self, src: ModId, dst: ModId, mat: Matrix) -> Result<ModMor> {
        let (a, b) = (self.module(src), self.module(dst));
        if mat.rows() != b.dim() || mat.cols() != a.dim() {
            return Err(Error::Dimension("morphism matrix shape".into()));
        }
        let f = ModMor { src, dst, mat };
        if !self.is_morphism(&f) {
            return Err(Error::Module("matrix is not an even intertwiner".into()));
        }
        Ok(f)
    }

    pub fn parity_shift_obj(&self, a: ModId) -> ModId {
        let m = self.parity_shift(&self.module(a));
        let name = format!("Pi{}", wrap(&self.name(a)));
        self.intern(m, || name)
    }

    pub fn direct_sum_obj(&self, a: ModId, b: ModId) -> ModId {
        let m = self.direct_sum(&self.module(a), &self.module(b));
        let name = format!("{}+{}", wrap(&self.name(a)), wrap(&self.name(b)));
        self.intern(m, || name)
    }

    /// Converts the full subcategory on `objs` into a strict datum, provided the
    /// list is closed under `⊗` and duals literally (as modules).
    pub fn to_datum(&self, name: &str, objs: &[ModId]) -> Result<CategoryDatum> {
        let pos = |id: ModId| objs.iter().position(|&o| o == id);
        let n = objs.len();
        let unit =
            pos(self.unit).ok_or_else(|| Error::Invalid("the unit must be listed".into()))?;
        let mut tensor = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let t = self.tensor_obj(&objs[i], &objs[j]);
                tensor[i][j] = pos(t).ok_or_else(|| Error::NotTensorComplete {
                    left: self.name(objs[i]),
                    right: self.name(objs[j]),
                })?;
            }
        }
        let mut dual = vec![0; n];
        for i in 0..n {
            let d = self.dual_obj(&objs[i]);
            dual[i] = pos(d).ok_or_else(|| {
                Error::Invalid(format!("dual of {} is not listed", self.name(objs[i])))
            })?;
        }
        let hom_dims = (0..n)
            .map(|a| (0..n).map(|b| self.hom_dim(&objs[a], &objs[b])).collect())
            .collect();
        let names = objs.iter().map(|&o| self.name(o)).collect();
        let mut c = CategoryDatum::skeleton(name, self.field, names, unit, dual, tensor, hom_dims);
        for a in 0..n {
            for b in 0..n {
                let fs = self.hom_basis(&objs[a], &objs[b]);
                for cc in 0..n {
                    let gs = self.hom_basis(&objs[b], &objs[cc]);
                    let t = c.triple(a, b, cc);
                    let mut vals = Vec::new();
                    for g in &gs {
                        for f in &fs {
                            vals.extend(self.coords(&self.compose(g, f)));
                        }
                    }
                    c.compose[t] = vals;
                }
            }
        }
        for i in 0..n {
            for i2 in 0..n {
                let fs = self.hom_basis(&objs[i], &objs[i2]);
                for j in 0..n {
                    for j2 in 0..n {
                        let gs = self.hom_basis(&objs[j], &objs[j2]);
                        let mut vals = Vec::new();
                        for f in &fs {
                            for g in &gs {
                                vals.extend(self.coords(&self.tensor_mor(f, g)));
                            }
                        }
                        let q = c.quad(i, i2, j, j2);
                        c.tensor_mor[q] = vals;
                    }
                }
            }
        }
        for (a, o) in objs.iter().enumerate() {
            c.id_vec[a] = self.coords(&self.identity(o));
            c.ev[a] = self.coords(&self.ev(o));
            c.coev[a] = self.coords(&self.coev(o));
            c.ev_tilde[a] = self.coords(&self.ev_tilde(o));
            c.coev_tilde[a] = self.coords(&self.coev_tilde(o));
        }
        c.subcategories = vec![SubcategorySpec::new(
            "all",
            SubcategoryRole::Ideal,
            (0..n).collect(),
        )?];
        Ok(c)
    }

    /// Image of a module morphism in a datum produced by [`to_datum`](Self::to_datum).
    pub fn to_datum_mor(&self, objs: &[ModId], f: &ModMor) -> Option<MorphismVec> {
        let src = objs.iter().position(|&o| o == f.src)?;
        let dst = objs.iter().position(|&o| o == f.dst)?;
        Some(MorphismVec {
            src,
            dst,
            coeffs: self.coords(f),
        })
    }
}

impl Pivotal for SuperModCategory {
    type Obj = ModId;
    type Mor = ModMor;

    fn field(&self) -> Field {
        self.field
    }

    fn unit(&self) -> ModId {
        self.unit
    }

    fn tensor_obj(&self, a: &ModId, b: &ModId) -> ModId {
        if let Some(&t) = self.reg.lock().unwrap().tensors.get(&(*a, *b)) {
            return t;
        }
        let (va, vb) = (self.module(*a), self.module(*b));
        let pa = va.grading(self.field);
        let ib = Matrix::identity(self.field, vb.dim());
        let parity = va
            .parity
            .iter()
            .flat_map(|p| vb.parity.iter().map(move |q| (p + q) % 2))
            .collect();
        let actions = va
            .actions
            .iter()
            .zip(&vb.actions)
            .map(|(x, y)| x.kron(&ib).add(&pa.kron(y)))
            .collect();
        let name = format!("{}⊗{}", self.name(*a), self.name(*b));
        let t = self.intern(SuperModule { parity, actions }, || name);
        self.reg.lock().unwrap().tensors.insert((*a, *b), t);
        t
    }

    fn dual_obj(&self, a: &ModId) -> ModId {
        if let Some(&d) = self.reg.lock().unwrap().duals.get(a) {
            return d;
        }
        let v = self.module(*a);
        let p = v.grading(self.field);
        let actions = v
            .actions
            .iter()
            .map(|x| x.transpose().mul(&p).neg())
            .collect();
        let name = format!("{}*", wrap(&self.name(*a)));
        let d = self.intern(
            SuperModule {
                parity: v.parity.clone(),
                actions,
            },
            || name,
        );
        self.reg.lock().unwrap().duals.insert(*a, d);
        d
    }

    fn obj_name(&self, a: &ModId) -> String {
        self.name(*a)
    }

    fn src(&self, f: &ModMor) -> ModId {
        f.src
    }

    fn dst(&self, f: &ModMor) -> ModId {
        f.dst
    }

    fn hom_dim(&self, a: &ModId, b: &ModId) -> usize {
        self.hom_data(*a, *b).basis.len()
    }

    fn hom_basis(&self, a: &ModId, b: &ModId) -> Vec<ModMor> {
        self.hom_data(*a, *b)
            .basis
            .iter()
            .map(|m| ModMor {
                src: *a,
                dst: *b,
                mat: m.clone(),
            })
            .collect()
    }

    fn coords(&self, f: &ModMor) -> Vec<Scalar> {
        let h = self.hom_data(f.src, f.dst);
        h.coord_positions
            .iter()
            .map(|&p| f.mat.entries()[p].clone())
            .collect()
    }

    fn from_coords(&self, a: &ModId, b: &ModId, c: &[Scalar]) -> ModMor {
        let h = self.hom_data(*a, *b);
        assert_eq!(c.len(), h.basis.len(), "coefficient length");
        let (da, db) = (self.module(*a).dim(), self.module(*b).dim());
        let mat = h
            .basis
            .iter()
            .zip(c)
            .filter(|(_, x)| !x.is_zero())
            .fold(Matrix::zeros(self.field, db, da), |acc, (m, x)| {
                acc.add(&m.scale(x))
            });
        ModMor {
            src: *a,
            dst: *b,
            mat,
        }
    }

    fn embed(&self, f: &ModMor) -> Vec<Scalar> {
        f.mat.entries().to_vec()
    }

    fn identity(&self, a: &ModId) -> ModMor {
        let d = self.module(*a).dim();
        ModMor {
            src: *a,
            dst: *a,
            mat: Matrix::identity(self.field, d),
        }
    }

    fn compose(&self, g: &ModMor, f: &ModMor) -> ModMor {
        assert_eq!(f.dst, g.src, "composing non-composable morphisms");
        ModMor {
            src: f.src,
            dst: g.dst,
            mat: g.mat.mul(&f.mat),
        }
    }

    fn tensor_mor(&self, f: &ModMor, g: &ModMor) -> ModMor {
        ModMor {
            src: self.tensor_obj(&f.src, &g.src),
            dst: self.tensor_obj(&f.dst, &g.dst),
            mat: f.mat.kron(&g.mat),
        }
    }

    fn lin(&self, a: &ModId, b: &ModId, terms: &[(Scalar, &ModMor)]) -> ModMor {
        let (da, db) = (self.module(*a).dim(), self.module(*b).dim());
        let mat = terms.iter().filter(|(x, _)| !x.is_zero()).fold(
            Matrix::zeros(self.field, db, da),
            |acc, (x, m)| {
                assert!(
                    m.src == *a && m.dst == *b,
                    "linear combination across hom spaces"
                );
                acc.add(&m.mat.scale(x))
            },
        );
        ModMor {
            src: *a,
            dst: *b,
            mat,
        }
    }

    fn ev(&self, a: &ModId) -> ModMor {
        let d = self.module(*a).dim();
        let mut mat = Matrix::zeros(self.field, 1, d * d);
        for i in 0..d {
            mat.set(0, i * d + i, self.field.one());
        }
        ModMor {
            src: self.tensor_obj(&self.dual_obj(a), a),
            dst: self.unit,
            mat,
        }
    }

    fn coev(&self, a: &ModId) -> ModMor {
        let d = self.module(*a).dim();
        let mut mat = Matrix::zeros(self.field, d * d, 1);
        for i in 0..d {
            mat.set(i * d + i, 0, self.field.one());
        }
        ModMor {
            src: self.unit,
            dst: self.tensor_obj(a, &self.dual_obj(a)),
            mat,
        }
    }

    fn ev_tilde(&self, a: &ModId) -> ModMor {
        let v = self.module(*a);
        let d = v.dim();
        let mut mat = Matrix::zeros(self.field, 1, d * d);
        for i in 0..d {
            mat.set(
                0,
                i * d + i,
                self.field.int(if v.parity[i] == 0 { 1 } else { -1 }),
            );
        }
        ModMor {
            src: self.tensor_obj(a, &self.dual_obj(a)),
            dst: self.unit,
            mat,
        }
    }

    fn coev_tilde(&self, a: &ModId) -> ModMor {
        let v = self.module(*a);
        let d = v.dim();
        let mut mat = Matrix::zeros(self.field, d * d, 1);
        for i in 0..d {
            mat.set(
                i * d + i,
                0,
                self.field.int(if v.parity[i] == 0 { 1 } else { -1 }),
            );
        }
        ModMor {
            src: self.unit,
            dst: self.tensor_obj(&self.dual_obj(a), a),
            mat,
        }
    }

    fn is_morphism(&self, f: &ModMor) -> bool {
        let (v, w) = (self.module(f.src), self.module(f.dst));
        if f.mat.rows() != w.dim() || f.mat.cols() != v.dim() {
            return false;
        }
        for i in 0..w.dim() {
            for j in 0..v.dim() {
                if w.parity[i] != v.parity[j] && !f.mat.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        v.actions
            .iter()
            .zip(&w.actions)
            .all(|(av, aw)| f.mat.mul(av) == aw.mul(&f.mat))
    }
}

/// For three generators `a, b, c`: the module `X(λ, μ)`, which is `Λ⟨a,b⟩` with
/// `c` acting as `−μ·a + λ·b`.
pub fn module_x(cat: &SuperModCategory, lambda: &Scalar, mu: &Scalar) -> Result<SuperModule> {
    if cat.generators().len() != 3 {
        return Err(Error::Module(
            "X(λ,μ) needs exactly three generators".into(),
        ));
    }
    let small = SuperModCategory::new(cat.field(), &["a", "b"]);
    let free = small.free_module();
    let (aa, ab) = (&free.actions[0], &free.actions[1]);
    let ac = aa.scale(&-mu).add(&ab.scale(lambda));
    let m = SuperModule {
        parity: free.parity.clone(),
        actions: vec![aa.clone(), ab.clone(), ac],
    };
    cat.check_module(&m)?;
    Ok(m)
}

/// Builds the exterior-algebra super-module category with its standard objects
/// and any additional named modules.
pub fn build_exterior_smod(
    field: Field,
    generators: &[&str],
    extra: Vec<(String, SuperModule)>,
) -> Result<(SuperModCategory, Vec<ModId>)> {
    let cat = SuperModCategory::new(field, generators);
    let mut objs = if generators.is_empty() {
        vec![cat.unit, cat.add_module("Pi1", cat.trivial_module(1))?]
    } else {
        cat.standard_objects()
    };
    for (name, m) in extra {
        objs.push(cat.add_module(&name, m)?);
    }
    Ok((cat, objs))
}
