use crate::error::{Error, Result};
use crate::exactla::{annihilator, Field, Matrix, QuotientSpace, Scalar, Subspace};

/// Action matrices of one basis morphism `f : i → j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisAction {
    /// Per first argument `a`: `F(a, i) → F(a, j)`.
    pub left: Vec<Matrix>,
    /// Per second argument `b`: `F(j, b) → F(i, b)`.
    pub right: Vec<Matrix>,
}

/// A bifunctor `F : Cᵒᵖ × C → Vect` on a finite object list, given by the
/// dimensions of `F(a, b)` and the actions of basis morphisms. Contravariant in
/// the first argument, covariant in the second.
#[derive(Clone, Debug)]
pub struct BifunctorPresentation {
    pub field: Field,
    pub labels: Vec<String>,
    pub dims: Vec<Vec<usize>>,
    /// `homs[i][j]`: the basis morphisms `i → j`.
    pub homs: Vec<Vec<Vec<BasisAction>>>,
    /// Coefficients of `id_i` in the basis of `Hom(i, i)`.
    pub identity: Vec<Vec<Scalar>>,
    /// `compose[i][j][k][g][f]`: coefficients of `g ∘ f` for `f : i → j`, `g : j → k`.
    pub compose: Vec<Vec<Vec<Vec<Vec<Vec<Scalar>>>>>>,
}

/// A coend `∫^k F(k, k)` as a quotient of `⊕ₖ F(k, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoendResult {
    pub quotient: QuotientSpace,
    /// Offset of the block `F(k, k)` in the ambient space.
    pub offsets: Vec<usize>,
    pub labels: Vec<String>,
    /// Set when the object list is not known to generate the whole category.
    pub generator_restricted: bool,
}

impl CoendResult {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn relation_count(&self) -> usize {
        self.quotient.relations().dim()
    }

    /// The ambient vector of `ψ ∈ F(k, k)` (the canonical leg `τ_k`).
    pub fn leg(&self, k: usize, psi: &[Scalar]) -> Vec<Scalar> {
        let f = self.quotient.field();
        let mut v = vec![f.zero(); self.ambient_dim()];
        v[self.offsets[k]..self.offsets[k] + psi.len()].clone_from_slice(psi);
        v
    }

    /// Quotient coordinates of `[ψ]` for `ψ ∈ F(k, k)`.
    pub fn class_of(&self, k: usize, psi: &[Scalar]) -> Vec<Scalar> {
        self.quotient.project(&self.leg(k, psi))
    }
}

impl BifunctorPresentation {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    fn diag_offsets(&self) -> (Vec<usize>, usize) {
        let mut offsets = Vec::with_capacity(self.n());
        let mut total = 0;
        for k in 0..self.n() {
            offsets.push(total);
            total += self.dims[k][k];
        }
        (offsets, total)
    }

    fn combo(
        &self,
        i: usize,
        j: usize,
        coeffs: &[Scalar],
        pick: impl Fn(&BasisAction) -> &Matrix,
        rows: usize,
        cols: usize,
    ) -> Matrix {
        self.homs[i][j]
            .iter()
            .zip(coeffs)
            .filter(|(_, x)| !x.is_zero())
            .fold(Matrix::zeros(self.field, rows, cols), |acc, (h, x)| {
                acc.add(&pick(h).scale(x))
            })
    }

    /// Checks shapes, identities, composites and that left and right actions commute.
    pub fn check_functoriality(&self) -> Result<()> {
        let n = self.n();
        let bad = |m: String| Err(Error::NotFunctorial(m));
        for i in 0..n {
            for j in 0..n {
                for (fi, f) in self.homs[i][j].iter().enumerate() {
                    if f.left.len() != n || f.right.len() != n {
                        return bad(format!(
                            "action of basis morphism {fi}: {i} → {j} has wrong arity"
                        ));
                    }
                    for a in 0..n {
                        let (l, r) = (&f.left[a], &f.right[a]);
                        if (l.rows(), l.cols()) != (self.dims[a][j], self.dims[a][i])
                            || (r.rows(), r.cols()) != (self.dims[i][a], self.dims[j][a])
                        {
                            return bad(format!(
                                "action of basis morphism {fi}: {i} → {j} has wrong shape"
                            ));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for a in 0..n {
                let l = self.combo(
                    i,
                    i,
                    &self.identity[i],
                    |h| &h.left[a],
                    self.dims[a][i],
                    self.dims[a][i],
                );
                let r = self.combo(
                    i,
                    i,
                    &self.identity[i],
                    |h| &h.right[a],
                    self.dims[i][a],
                    self.dims[i][a],
                );
                if l != Matrix::identity(self.field, self.dims[a][i])
                    || r != Matrix::identity(self.field, self.dims[i][a])
                {
                    return bad(format!(
                        "identity of {} does not act as the identity",
                        self.labels[i]
                    ));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for (gi, g) in self.homs[j][k].iter().enumerate() {
                        for (fi, f) in self.homs[i][j].iter().enumerate() {
                            let coeffs = &self.compose[i][j][k][gi][fi];
                            for a in 0..n {
                                let lhs = g.left[a].mul(&f.left[a]);
                                let rhs = self.combo(
                                    i,
                                    k,
                                    coeffs,
                                    |h| &h.left[a],
                                    self.dims[a][k],
                                    self.dims[a][i],
                                );
                                let lhs_r = f.right[a].mul(&g.right[a]);
                                let rhs_r = self.combo(
                                    i,
                                    k,
                                    coeffs,
                                    |h| &h.right[a],
                                    self.dims[i][a],
                                    self.dims[k][a],
                                );
                                if lhs != rhs || lhs_r != rhs_r {
                                    return bad(format!(
                                        "composite of basis morphisms {fi}: {} → {} and {gi}: {} → {} acts wrongly",
                                        self.labels[i], self.labels[j], self.labels[j], self.labels[k]
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        // left (second argument) and right (first argument) actions commute
        for i in 0..n {
            for j in 0..n {
                for f in &self.homs[i][j] {
                    for k in 0..n {
                        for l in 0..n {
                            for g in &self.homs[k][l] {
                                // F(l, i) → F(k, j) both ways
                                let one = g.right[j].mul(&f.left[l]);
                                let two = f.left[k].mul(&g.right[i]);
                                if one != two {
                                    return bad("left and right actions do not commute".into());
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Relation vectors `f ▷ Ψ − Ψ ◁ f` over basis `f : i → j` and basis `Ψ ∈ F(j, i)`.
    pub fn relations(&self) -> Vec<Vec<Scalar>> {
        let (offsets, total) = self.diag_offsets();
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in 0..self.n() {
                for f in &self.homs[i][j] {
                    let l = &f.left[j]; // F(j, i) → F(j, j)
                    let r = &f.right[i]; // F(j, i) → F(i, i)
                    for col in 0..self.dims[j][i] {
                        let mut v = vec![self.field.zero(); total];
                        for row in 0..self.dims[j][j] {
                            v[offsets[j] + row] = l.get(row, col).clone();
                        }
                        for row in 0..self.dims[i][i] {
                            let x = &v[offsets[i] + row] - r.get(row, col);
                            v[offsets[i] + row] = x;
                        }
                        if v.iter().any(|x| !x.is_zero()) {
                            out.push(v);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn relation_space(&self) -> Subspace {
        let (_, total) = self.diag_offsets();
        Subspace::span(self.field, total, &self.relations())
    }

    pub fn ambient_dim(&self) -> usize {
        self.diag_offsets().1
    }
}

/// The coend as the cokernel of the dinaturality relations.
pub fn coend(f: &BifunctorPresentation) -> Result<CoendResult> {
    f.check_functoriality()?;
    Ok(coend_unchecked(f))
}

pub(crate) fn coend_unchecked(f: &BifunctorPresentation) -> CoendResult {
    let (offsets, _) = f.diag_offsets();
    CoendResult {
        quotient: QuotientSpace::new(f.relation_space()),
        offsets,
        labels: f.labels.clone(),
        generator_restricted: false,
    }
}

/// Families of functionals on `⊕ F(k, k)` that are dinatural, i.e. the end of
/// the dual bifunctor, as the annihilator of the coend relations.
pub fn end_dual(f: &BifunctorPresentation) -> Result<Subspace> {
    f.check_functoriality()?;
    Ok(annihilator(&f.relation_space()))
}
