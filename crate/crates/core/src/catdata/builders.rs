//! Builders for small strict pivotal categories given by structure constants.

use crate::catdata::datum::{CategoryDatum, SubcategoryRole, SubcategorySpec};
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar};

/// One object, `End(1) = k`.
pub fn build_trivial(field: Field) -> CategoryDatum {
    build_graded_vect_unchecked("trivial", field, &[field.one()])
}

/// ℤ/n-graded vector spaces with simple objects `X₀,…,X_{n−1}` and a pivotal
/// structure with `dim_r Xₖ = pivotal_dims[k]`, `dim_l Xₖ = pivotal_dims[k]⁻¹`.
///
/// The dimensions must form a character of ℤ/n for the pivotal structure to be
/// monoidal; this is left to the validator.
pub fn build_graded_vect(n: usize, pivotal_dims: &[Scalar]) -> Result<CategoryDatum> {
    if n == 0 {
        return Err(Error::Invalid(
            "grading group must be nontrivial in size".into(),
        ));
    }
    if pivotal_dims.len() != n {
        return Err(Error::Invalid(format!(
            "expected {n} pivotal dimensions, got {}",
            pivotal_dims.len()
        )));
    }
    let field = pivotal_dims[0].field();
    for d in pivotal_dims {
        if d.field() != field {
            return Err(Error::Field(
                "pivotal dimensions lie in different fields".into(),
            ));
        }
        if d.is_zero() {
            return Err(Error::Invalid(
                "pivotal dimensions must be invertible".into(),
            ));
        }
    }
    let name = if n == 1 {
        "trivial".to_string()
    } else {
        format!("graded-vect-Z{n}")
    };
    Ok(build_graded_vect_unchecked(&name, field, pivotal_dims))
}

/// `Vect_{ℤ/3}` with `dim_r X₁ = ζ`, `dim_r X₂ = ζ²` for a primitive cube root
/// of unity `ζ` of the (prime) field.
pub fn build_graded_z3_zeta(field: Field) -> Result<CategoryDatum> {
    let zeta = field
        .primitive_root_of_unity(3)
        .ok_or_else(|| Error::Field(format!("{field} has no primitive cube root of unity")))?;
    let dims = [field.one(), zeta.clone(), zeta.pow(2)];
    build_graded_vect(3, &dims)
}

fn build_graded_vect_unchecked(name: &str, field: Field, dims: &[Scalar]) -> CategoryDatum {
    let n = dims.len();
    let objects = (0..n).map(|k| format!("X{k}")).collect();
    let dual = (0..n).map(|k| (n - k) % n).collect();
    let tensor = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let hom_dims = (0..n)
        .map(|a| (0..n).map(|b| usize::from(a == b)).collect())
        .collect();
    let mut c = CategoryDatum::skeleton(name, field, objects, 0, dual, tensor, hom_dims);
    let one = field.one();
    for a in 0..n {
        let t = c.triple(a, a, a);
        c.compose[t] = vec![one.clone()];
        c.id_vec[a] = vec![one.clone()];
        c.ev[a] = vec![one.clone()];
        c.coev[a] = vec![one.clone()];
        c.ev_tilde[a] = vec![dims[a].clone()];
        c.coev_tilde[a] = vec![dims[a].inv().expect("invertible pivotal dimension")];
        for b in 0..n {
            let q = c.quad(a, a, b, b);
            c.tensor_mor[q] = vec![one.clone()];
        }
    }
    c.subcategories = vec![
        SubcategorySpec::new("all", SubcategoryRole::Ideal, (0..n).collect()).expect("nonempty"),
        SubcategorySpec::new("unit", SubcategoryRole::Admissibility, vec![0]).expect("nonempty"),
    ];
    c
}

/// One object with `End(1) = k[x]/(x²)`, basis `(1, x)`.
pub fn build_dual_numbers(field: Field) -> CategoryDatum {
    let mut c = CategoryDatum::skeleton(
        "dual-numbers",
        field,
        vec!["1".into()],
        0,
        vec![0],
        vec![vec![0]],
        vec![vec![2]],
    );
    let (z, o) = (field.zero(), field.one());
    // [g][f][k]: 1·1 = 1, 1·x = x, x·1 = x, x·x = 0
    let mult = vec![
        o.clone(),
        z.clone(),
        z.clone(),
        o.clone(),
        z.clone(),
        o.clone(),
        z.clone(),
        z.clone(),
    ];
    c.compose[0] = mult.clone();
    c.tensor_mor[0] = mult;
    c.id_vec[0] = vec![o.clone(), z.clone()];
    for v in [&mut c.ev, &mut c.coev, &mut c.ev_tilde, &mut c.coev_tilde] {
        v[0] = vec![o.clone(), z.clone()];
    }
    c
}
