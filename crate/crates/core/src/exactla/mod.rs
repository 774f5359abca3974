//! Exact linear algebra over ℚ and prime fields.

mod matrix;
mod scalar;
mod space;

pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use space::{annihilator, cokernel, kernel_basis, rref, solve, QuotientSpace, Subspace};

/// `Σ cᵢ·vᵢ` for equal-length vectors.
pub fn lin_comb(field: Field, len: usize, terms: &[(Scalar, &[Scalar])]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v.iter()) {
            if !x.is_zero() {
                *o = &*o + &(c * x);
            }
        }
    }
    out
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}
