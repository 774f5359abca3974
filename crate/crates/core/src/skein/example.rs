//! Infinitely many independent loop classes in the disc skein module of the
//! super modules over `Λ⟨a,b,c⟩` that are free over `Λ⟨a,b⟩`.

use serde::Serialize;

use crate::catdata::supermod::{module_x, ModId, SuperModCategory, SuperModule};
use crate::catdata::Pivotal;
use crate::coend::{coend, BasisAction, BifunctorPresentation};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, solve, Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub lambda: Scalar,
    pub mu: Scalar,
    /// `dim Hom(1, X)`.
    pub b0_dim: usize,
    /// Dimension of the even part of the image of `ab`.
    pub b0_dim_via_ab: usize,
    pub psi_ac: Vec<Vec<Scalar>>,
    pub psi_bc: Vec<Vec<Scalar>>,
    /// Joint generalised eigenvalues `(α, β)` with multiplicities.
    pub eigenspaces: Vec<(Scalar, Scalar, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Example59Report {
    pub field: String,
    pub samples: Vec<SampleReport>,
    /// `traces[s][t] = tr_{λₜ,μₜ}([id_{X(λₛ,μₛ)}])`.
    pub traces: Vec<Vec<Scalar>>,
    pub delta_ok: bool,
    /// Every `tr_{α,β}` vanishes on the coend relations.
    pub traces_well_defined: bool,
    pub coend_dim: usize,
    pub coend_ambient: usize,
    /// Rank of the classes `[id_{X(λ,μ)}]` in the coend.
    pub rank: usize,
}

impl Example59Report {
    pub fn passed(&self) -> bool {
        self.delta_ok
            && self.traces_well_defined
            && self.rank == self.samples.len()
            && self
                .samples
                .iter()
                .all(|s| s.b0_dim == 1 && s.b0_dim_via_ab == 1)
    }
}

/// `B₀(X)` inside `X` with the maps of the reduction to `Vect(B₀(X), B₀(X))`.
struct Reduction {
    basis: Matrix,
    /// `σ₀ : B₀(X) → X`, a linear section of `π₀`.
    section: Matrix,
    psi_ac: Matrix,
    psi_bc: Matrix,
    via_ab: usize,
}

fn even_part(m: &SuperModule, v: &Matrix) -> Matrix {
    let mut out = v.clone();
    for (i, &p) in m.parity.iter().enumerate() {
        if p == 1 {
            for j in 0..v.cols() {
                out.set(i, j, v.field().zero());
            }
        }
    }
    out
}

/// Coordinates in `basis` of every column of `m`.
fn coordinates(basis: &Matrix, m: &Matrix) -> Result<Matrix> {
    let cols: Vec<Vec<Scalar>> = (0..m.cols())
        .map(|j| {
            solve(basis, &m.col(j))?.ok_or_else(|| Error::Module("vector outside B₀(X)".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(m.field(), basis.cols(), &cols))
}

fn reduce(cat: &SuperModCategory, x: ModId) -> Result<Reduction> {
    let field = cat.field();
    let m = cat.module(x);
    let cols: Vec<Vec<Scalar>> = cat
        .hom_basis(&cat.unit(), &x)
        .iter()
        .map(|f| f.mat.col(0))
        .collect();
    let basis = Matrix::from_columns(field, m.dim(), &cols);
    let (aa, ab, ac) = (&m.actions[0], &m.actions[1], &m.actions[2]);
    let via_ab = even_part(&m, &aa.mul(ab)).rank();
    let pi0 = coordinates(&basis, &even_part(&m, &aa.mul(ab)))?;
    let section_cols: Vec<Vec<Scalar>> = (0..basis.cols())
        .map(|i| {
            let mut e = vec![field.zero(); basis.cols()];
            e[i] = field.one();
            solve(&pi0, &e)?.ok_or_else(|| Error::Module("π₀ is not surjective".into()))
        })
        .collect::<Result<_>>()?;
    let section = Matrix::from_columns(field, m.dim(), &section_cols);
    let psi_ac = coordinates(&basis, &even_part(&m, &aa.mul(ac)))?.mul(&section);
    let psi_bc = coordinates(&basis, &even_part(&m, &ab.mul(ac)))?.mul(&section);
    Ok(Reduction {
        basis,
        section,
        psi_ac,
        psi_bc,
        via_ab,
    })
}

fn shifted_power(m: &Matrix, s: &Scalar) -> Matrix {
    let n = m.rows();
    let shifted = m.sub(&Matrix::identity(m.field(), n).scale(s));
    (0..n).fold(Matrix::identity(m.field(), n), |acc, _| acc.mul(&shifted))
}

/// Joint generalised eigenspaces of two commuting operators, with projectors.
fn joint_eigenspaces(
    a: &Matrix,
    b: &Matrix,
    candidates: &[Scalar],
) -> Result<Vec<(Scalar, Scalar, Matrix)>> {
    let n = a.rows();
    let field = a.field();
    let mut spaces = Vec::new();
    for alpha in candidates {
        let ka = shifted_power(a, alpha);
        if kernel_basis(&ka).dim() == 0 {
            continue;
        }
        for beta in candidates {
            let kb = shifted_power(b, beta);
            let k = kernel_basis(&ka.vstack(&kb));
            if k.dim() > 0 {
                spaces.push((alpha.clone(), beta.clone(), k));
            }
        }
    }
    let total: usize = spaces.iter().map(|(_, _, k)| k.dim()).sum();
    if total != n {
        return Err(Error::Field(format!(
            "eigenvalues of ψ_ac, ψ_bc are not all in {field}"
        )));
    }
    let cols: Vec<Vec<Scalar>> = spaces
        .iter()
        .flat_map(|(_, _, k)| k.basis_vectors())
        .collect();
    let v = Matrix::from_columns(field, n, &cols);
    let v_inv = v
        .inverse()
        .ok_or_else(|| Error::Field("eigenspaces do not span".into()))?;
    let mut out = Vec::new();
    let mut start = 0;
    for (alpha, beta, k) in spaces {
        let mut d = Matrix::zeros(field, n, n);
        for i in start..start + k.dim() {
            d.set(i, i, field.one());
        }
        start += k.dim();
        out.push((alpha, beta, v.mul(&d).mul(&v_inv)));
    }
    Ok(out)
}

fn candidates(field: Field, samples: &[(Scalar, Scalar)]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = match field.elements() {
        Some(all) if all.len() <= 10_007 => all,
        _ => Vec::new(),
    };
    for (l, m) in samples {
        for s in [l, m] {
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
    }
    out
}

fn rows_of(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// `F(X, Y) = Hom(X, 1) ⊗ Hom(1, Y)` on a list of modules.
fn disc_bifunctor(cat: &SuperModCategory, objs: &[ModId]) -> BifunctorPresentation {
    let field = cat.field();
    let unit = cat.unit();
    let n = objs.len();
    let outs: Vec<_> = objs.iter().map(|x| cat.hom_basis(x, &unit)).collect();
    let ins: Vec<_> = objs.iter().map(|x| cat.hom_basis(&unit, x)).collect();
    let dims: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| outs[a].len() * ins[b].len()).collect())
        .collect();
    let matrix = |images: Vec<Vec<Scalar>>, rows: usize| Matrix::from_columns(field, rows, &images);
    let mut homs = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for f in cat.hom_basis(&objs[i], &objs[j]) {
                // v ↦ f∘v on Hom(1, i) → Hom(1, j); u ↦ u∘f on Hom(j, 1) → Hom(i, 1)
                let post = matrix(
                    ins[i]
                        .iter()
                        .map(|v| cat.coords(&cat.compose(&f, v)))
                        .collect(),
                    ins[j].len(),
                );
                let pre = matrix(
                    outs[j]
                        .iter()
                        .map(|u| cat.coords(&cat.compose(u, &f)))
                        .collect(),
                    outs[i].len(),
                );
                let left = (0..n)
                    .map(|a| Matrix::identity(field, outs[a].len()).kron(&post))
                    .collect();
                let right = (0..n)
                    .map(|b| pre.kron(&Matrix::identity(field, ins[b].len())))
                    .collect();
                homs[i][j].push(BasisAction { left, right });
            }
        }
    }
    let mut compose = vec![vec![vec![Vec::new(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let fs = cat.hom_basis(&objs[i], &objs[j]);
            for k in 0..n {
                compose[i][j][k] = cat
                    .hom_basis(&objs[j], &objs[k])
                    .iter()
                    .map(|g| fs.iter().map(|f| cat.coords(&cat.compose(g, f))).collect())
                    .collect();
            }
        }
    }
    BifunctorPresentation {
        field,
        labels: objs.iter().map(|o| cat.obj_name(o)).collect(),
        dims,
        homs,
        identity: objs.iter().map(|o| cat.coords(&cat.identity(o))).collect(),
        compose,
    }
}

/// Builds `X(λ,μ)` for each sample together with the projectives, reduces the
/// disc coend `∫^X Hom(X,1) ⊗ Hom(1,X)` to `Vect(B₀(X), B₀(X))`, and evaluates
/// the eigenspace traces `tr_{α,β}` on the loop classes `[id_X]`.
pub fn example59_pipeline(field: Field, samples: &[(Scalar, Scalar)]) -> Result<Example59Report> {
    if samples.is_empty() {
        return Err(Error::Invalid("at least one sample point is needed".into()));
    }
    let cat = SuperModCategory::new(field, &["a", "b", "c"]);
    let mut xs = Vec::new();
    for (l, m) in samples {
        xs.push(cat.add_module(&format!("X({l},{m})"), module_x(&cat, l, m)?)?);
    }
    let free = cat.free_module();
    let mut objs = xs.clone();
    objs.push(cat.add_module("Lambda", free.clone())?);
    objs.push(cat.add_module("PiLambda", cat.parity_shift(&free))?);

    let cands = candidates(field, samples);
    let unit = cat.unit();
    let mut reports = Vec::new();
    let mut reductions = Vec::new();
    let mut projectors = Vec::new();
    for (x, (l, m)) in xs.iter().zip(samples) {
        let r = reduce(&cat, *x)?;
        let eig = joint_eigenspaces(&r.psi_ac, &r.psi_bc, &cands)?;
        reports.push(SampleReport {
            lambda: l.clone(),
            mu: m.clone(),
            b0_dim: r.basis.cols(),
            b0_dim_via_ab: r.via_ab,
            psi_ac: rows_of(&r.psi_ac),
            psi_bc: rows_of(&r.psi_bc),
            eigenspaces: eig
                .iter()
                .map(|(a, b, p)| (a.clone(), b.clone(), p.rank()))
                .collect(),
        });
        reductions.push(r);
        projectors.push(eig);
    }

    let pres = disc_bifunctor(&cat, &objs);
    let result = coend(&pres)?;
    let ambient = result.ambient_dim();
    // tr_{α,β}(u ⊗ v) = u(σ₀(P_{α,β} v)) on the block of X; projective blocks are zero
    let functional = |alpha: &Scalar, beta: &Scalar| -> Result<Vec<Scalar>> {
        let mut t = vec![field.zero(); ambient];
        for (s, x) in xs.iter().enumerate() {
            let Some((_, _, proj)) = projectors[s]
                .iter()
                .find(|(a, b, _)| a == alpha && b == beta)
            else {
                continue;
            };
            let r = &reductions[s];
            let ins = cat.hom_basis(&unit, x);
            let outs = cat.hom_basis(x, &unit);
            for (ui, u) in outs.iter().enumerate() {
                for (vi, v) in ins.iter().enumerate() {
                    let coords = coordinates(&r.basis, &v.mat)?;
                    let back = r.section.mul(&proj.mul(&coords));
                    t[result.offsets[s] + ui * ins.len() + vi] = u.mat.mul(&back).get(0, 0).clone();
                }
            }
        }
        Ok(t)
    };
    let functionals: Vec<Vec<Scalar>> = samples
        .iter()
        .map(|(l, m)| functional(l, m))
        .collect::<Result<_>>()?;
    let dot = |a: &[Scalar], b: &[Scalar]| {
        a.iter()
            .zip(b)
            .fold(field.zero(), |acc, (x, y)| &acc + &(x * y))
    };
    let relations = result.quotient.relations().basis_vectors();
    let traces_well_defined = functionals
        .iter()
        .all(|t| relations.iter().all(|r| dot(t, r).is_zero()));

    // [id_X]: the element of F(X, X) that τ sends to id_{B₀(X)}
    let mut ids = Vec::new();
    for (s, x) in xs.iter().enumerate() {
        let r = &reductions[s];
        let ins = cat.hom_basis(&unit, x);
        let outs = cat.hom_basis(x, &unit);
        let b = r.basis.cols();
        let mut cols = Vec::new();
        for u in &outs {
            for v in &ins {
                let tau = coordinates(&r.basis, &v.mat)?.mul(&u.mat.mul(&r.section));
                cols.push(tau.entries().to_vec());
            }
        }
        let target = Matrix::identity(field, b).entries().to_vec();
        let psi = solve(&Matrix::from_columns(field, b * b, &cols), &target)?.ok_or_else(|| {
            Error::Invalid(format!(
                "τ does not reach the identity of B₀({})",
                cat.obj_name(x)
            ))
        })?;
        ids.push(result.leg(s, &psi));
    }
    let traces: Vec<Vec<Scalar>> = ids
        .iter()
        .map(|v| functionals.iter().map(|t| dot(t, v)).collect())
        .collect();
    let delta_ok = (0..samples.len()).all(|s| {
        (0..samples.len()).all(|t| {
            let expected = if samples[s] == samples[t] {
                field.one()
            } else {
                field.zero()
            };
            traces[s][t] == expected
        })
    });
    let classes: Vec<Vec<Scalar>> = ids.iter().map(|v| result.quotient.project(v)).collect();
    let rank = Subspace::span(field, result.dim(), &classes).dim();
    Ok(Example59Report {
        field: field.to_string(),
        samples: reports,
        traces,
        delta_ok,
        traces_well_defined,
        coend_dim: result.dim(),
        coend_ambient: ambient,
        rank,
    })
}
