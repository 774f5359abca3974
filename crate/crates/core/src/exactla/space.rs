//! Row reduction and the subspace / quotient machinery built on it.

use crate::error::{Error, Result};
use crate::exactla::matrix::Matrix;
use crate::exactla::scalar::{pow_mod, Field, Scalar};

/// Reduced row-echelon form, rank, and pivot columns.
///
/// Pivoting is deterministic: columns are scanned left to right and the pivot
/// row is the first row at or below the current one with a nonzero entry.
pub fn rref(m: &Matrix) -> (Matrix, usize, Vec<usize>) {
    match m.field() {
        Field::Prime(p) => rref_mod(m, p),
        Field::Rational => rref_generic(m),
    }
}

fn rref_generic(m: &Matrix) -> (Matrix, usize, Vec<usize>) {
    let field = m.field();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let data: Vec<Vec<Scalar>> = a;
    let out = if rows == 0 {
        Matrix::zeros(field, 0, cols)
    } else {
        Matrix::from_rows(field, data).expect("rectangular")
    };
    (out, r, pivots)
}

fn rref_mod(m: &Matrix, p: u64) -> (Matrix, usize, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| m.row(i).iter().map(|x| x.residue().unwrap()).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = pow_mod(a[r][c], p - 2, p);
        for x in a[r].iter_mut().skip(c) {
            *x = *x * inv % p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = p - row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if y != 0 {
                    *x = (*x + factor * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Matrix::zeros(Field::Prime(p), rows, cols);
    for (i, row) in a.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                out.set(i, j, Scalar::Mod { r: v, p });
            }
        }
    }
    (out, r, pivots)
}

/// A subspace of `field^ambient_dim`, held as the nonzero rows of an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let (r, rank, pivots) = rref(m);
        Subspace {
            ambient_dim: m.cols(),
            basis: r.submatrix(0, rank, 0, m.cols()),
            pivots,
        }
    }

    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient_dim);
        }
        let m = Matrix::from_rows(field, vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient_dim, "vector length");
        Subspace::row_space(&m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    /// Basis vectors as rows, in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let mut out = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if out[c].is_zero() {
                continue;
            }
            let factor = out[c].clone();
            for (x, y) in out.iter_mut().zip(self.basis.row(r)) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, o.ambient_dim, "ambient dimension");
        Subspace::row_space(&self.basis.vstack(&o.basis))
    }
}

/// `ambient / relations`, presented by the non-pivot ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    rep_basis: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> QuotientSpace {
        let pivots = relations.pivots();
        let rep_basis = (0..relations.ambient_dim())
            .filter(|c| !pivots.contains(c))
            .collect();
        QuotientSpace {
            relations,
            rep_basis,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.rep_basis.len()
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient coordinate represented by each quotient basis vector.
    pub fn rep_basis(&self) -> &[usize] {
        &self.rep_basis
    }

    /// Representative ambient vector of quotient basis vector `k`.
    pub fn representative(&self, k: usize) -> Vec<Scalar> {
        let f = self.field();
        let mut v = vec![f.zero(); self.ambient_dim()];
        v[self.rep_basis[k]] = f.one();
        v
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let red = self.relations.reduce(v);
        self.rep_basis.iter().map(|&c| red[c].clone()).collect()
    }

    /// The projection as a `dim × ambient_dim` matrix.
    pub fn project_matrix(&self) -> Matrix {
        let f = self.field();
        let cols: Vec<Vec<Scalar>> = (0..self.ambient_dim())
            .map(|c| {
                let mut e = vec![f.zero(); self.ambient_dim()];
                e[c] = f.one();
                self.project(&e)
            })
            .collect();
        Matrix::from_columns(f, self.dim(), &cols)
    }

    /// Further quotient by the images of `extra` ambient vectors.
    pub fn quotient_by(&self, extra: &[Vec<Scalar>]) -> QuotientSpace {
        let more = Subspace::span(self.field(), self.ambient_dim(), extra);
        QuotientSpace::new(self.relations.sum(&more))
    }
}

/// Kernel of `m` as a subspace of `field^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let f = m.field();
    let (r, rank, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); m.cols()];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = -r.get(row, fc);
            }
            v
        })
        .collect();
    Subspace::span(f, m.cols(), &vectors)
}

/// The cokernel of `m : field^cols → field^rows`; relations are the column space.
pub fn cokernel(m: &Matrix) -> QuotientSpace {
    QuotientSpace::new(Subspace::row_space(&m.transpose()))
}

/// Functionals (as coordinate vectors in the dual basis) vanishing on `s`.
pub fn annihilator(s: &Subspace) -> Subspace {
    if s.dim() == 0 {
        return Subspace::full(s.field(), s.ambient_dim());
    }
    kernel_basis(s.basis())
}

/// The least-pivot solution of `m·x = b`: free variables are set to zero.
/// Returns `Ok(None)` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let f = m.field();
    let aug = m.hstack(&Matrix::column(f, b.to_vec()));
    let (r, rank, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![f.zero(); m.cols()];
    for (row, &pc) in pivots.iter().enumerate().take(rank) {
        x[pc] = r.get(row, m.cols()).clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_examples() {
        let (_, rank, piv) = rref(&Matrix::from_ints(q(), 2, 2, &[1, 2, 2, 4]));
        assert_eq!((rank, piv), (1, vec![0]));
        assert_eq!(rref(&Matrix::identity(q(), 3)).1, 3);
        assert_eq!(rref(&Matrix::zeros(q(), 2, 5)).1, 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::zeros(q(), 4, 4)).dim(), 4);
        assert_eq!(kernel_basis(&Matrix::identity(q(), 3)).dim(), 0);
        let k = kernel_basis(&Matrix::from_ints(q(), 1, 2, &[1, 1]));
        assert_eq!(k.basis_vectors(), vec![vec![q().one(), q().int(-1)]]);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&Matrix::identity(q(), 3)).dim(), 0);
        assert_eq!(cokernel(&Matrix::zeros(q(), 3, 2)).dim(), 3);
        let c = cokernel(&Matrix::from_ints(q(), 2, 1, &[1, 1]));
        assert_eq!(c.dim(), 1);
        assert!(c
            .project(&[q().one(), q().one()])
            .iter()
            .all(|x| x.is_zero()));
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(annihilator(&Subspace::zero(q(), 3)).dim(), 3);
        assert_eq!(annihilator(&Subspace::full(q(), 3)).dim(), 0);
        let s = Subspace::span(q(), 2, &[vec![q().one(), q().one()]]);
        let a = annihilator(&s);
        assert_eq!(a.basis_vectors(), vec![vec![q().one(), q().int(-1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q().int(3), q().int(-2)];
        assert_eq!(
            solve(&Matrix::identity(q(), 2), &b).unwrap(),
            Some(b.clone())
        );
        assert_eq!(solve(&Matrix::zeros(q(), 2, 2), &b).unwrap(), None);
        let x = solve(&Matrix::from_ints(q(), 1, 1, &[2]), &[q().one()]).unwrap();
        assert_eq!(x, Some(vec![q().frac(1, 2)]));
        assert!(solve(&Matrix::identity(q(), 2), &[q().one()]).is_err());
    }

    #[test]
    fn prime_and_rational_paths_agree_on_rank() {
        let m = Matrix::from_ints(q(), 3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 10]);
        let p = Field::prime(101).unwrap();
        let mp = Matrix::from_ints(p, 3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 10]);
        assert_eq!(m.rank(), 3);
        assert_eq!(mp.rank(), 3);
        let inv = mp.inverse().unwrap();
        assert_eq!(mp.mul(&inv), Matrix::identity(p, 3));
    }

    #[test]
    fn quotient_projection_is_identity_on_representatives() {
        let rel = Subspace::span(q(), 3, &[vec![q().one(), q().one(), q().zero()]]);
        let qs = QuotientSpace::new(rel);
        assert_eq!(qs.dim(), 2);
        for k in 0..qs.dim() {
            let mut e = vec![q().zero(); 2];
            e[k] = q().one();
            assert_eq!(qs.project(&qs.representative(k)), e);
        }
    }
}
