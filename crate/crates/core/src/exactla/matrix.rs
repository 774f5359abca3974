use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::scalar::{Field, Scalar};

/// Dense row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if data.iter().any(|s| !field.contains(s)) {
            return Err(Error::Field(format!("entry outside {field}")));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            data,
        })
    }

    /// Builds an `rows × cols` matrix from integer entries.
    pub fn from_ints(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix {
            rows,
            cols,
            field,
            data: entries.iter().map(|&n| field.int(n)).collect(),
        }
    }

    pub fn column(field: Field, v: Vec<Scalar>) -> Matrix {
        Matrix {
            rows: v.len(),
            cols: 1,
            field,
            data: v,
        }
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        if let crate::exactla::Field::Prime(p) = self.field {
            let a: Vec<u64> = self.data.iter().map(|x| x.residue().unwrap()).collect();
            let b: Vec<u64> = o.data.iter().map(|x| x.residue().unwrap()).collect();
            let mut acc = vec![0u64; o.cols];
            for i in 0..self.rows {
                acc.iter_mut().for_each(|x| *x = 0);
                for k in 0..self.cols {
                    let x = a[i * self.cols + k];
                    if x == 0 {
                        continue;
                    }
                    let brow = &b[k * o.cols..(k + 1) * o.cols];
                    for (acc_j, &y) in acc.iter_mut().zip(brow) {
                        *acc_j = (*acc_j + x * y) % p;
                    }
                }
                for (j, &v) in acc.iter().enumerate() {
                    out.data[i * o.cols + j] = Scalar::Mod { r: v, p };
                }
            }
            return out;
        }
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let y = o.get(k, j);
                    if y.is_zero() {
                        continue;
                    }
                    let cur = &out.data[i * o.cols + j] + &(x * y);
                    out.data[i * o.cols + j] = cur;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "matrix difference shape"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.int(-1))
    }

    /// Kronecker product with lexicographic index order `(i, j) ↦ i·dim(o) + j`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols, "vstack shape");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        self.transpose().vstack(&o.transpose()).transpose()
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        crate::exactla::space::rref(self).1
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, rank, pivots) = crate::exactla::space::rref(&aug);
        if rank < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(r.submatrix(0, n, n, 2 * n))
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        (0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }
}
