//! JSON text format for category data.
//!
//! Structure constants are written sparsely as index tuples followed by the
//! scalar value, in lexicographic order, so writing is canonical and a
//! read/write round trip is byte-identical.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catdata::datum::{CategoryDatum, SubcategorySpec};
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar};

pub const FORMAT_TAG: &str = "skein-category/1";

type ComposeEntry = (usize, usize, usize, usize, usize, usize, Scalar);
type TensorEntry = (usize, usize, usize, usize, usize, usize, usize, Scalar);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumFile {
    format: String,
    name: String,
    field: String,
    objects: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    tensor: Vec<Vec<usize>>,
    hom_dims: Vec<Vec<usize>>,
    /// `(a, b, c, g, f, k, value)`: coefficient of basis `k` of `Hom(a,c)` in `g∘f`.
    compose: Vec<ComposeEntry>,
    /// `(i, i′, j, j′, f, g, k, value)`.
    tensor_mor: Vec<TensorEntry>,
    identity: Vec<Vec<Scalar>>,
    ev: Vec<Vec<Scalar>>,
    coev: Vec<Vec<Scalar>>,
    ev_tilde: Vec<Vec<Scalar>>,
    coev_tilde: Vec<Vec<Scalar>>,
    #[serde(default)]
    subcategories: Vec<SubcategorySpec>,
}

pub fn to_json(c: &CategoryDatum) -> String {
    let n = c.n();
    let h = |a: usize, b: usize| c.hom_dims[a][b];
    let mut compose = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let t = &c.compose[c.triple(a, b, cc)];
                let (hab, hac) = (h(a, b), h(a, cc));
                for (idx, v) in t.iter().enumerate() {
                    if !v.is_zero() {
                        let k = idx % hac;
                        let f = (idx / hac) % hab;
                        let g = idx / (hac * hab);
                        compose.push((a, b, cc, g, f, k, v.clone()));
                    }
                }
            }
        }
    }
    let mut tensor_mor = Vec::new();
    for i in 0..n {
        for i2 in 0..n {
            for j in 0..n {
                for j2 in 0..n {
                    let t = &c.tensor_mor[c.quad(i, i2, j, j2)];
                    let hk = h(c.tensor[i][j], c.tensor[i2][j2]);
                    let hjj = h(j, j2);
                    for (idx, v) in t.iter().enumerate() {
                        if !v.is_zero() {
                            let k = idx % hk;
                            let g = (idx / hk) % hjj;
                            let f = idx / (hk * hjj);
                            tensor_mor.push((i, i2, j, j2, f, g, k, v.clone()));
                        }
                    }
                }
            }
        }
    }
    let file = DatumFile {
        format: FORMAT_TAG.to_string(),
        name: c.name.clone(),
        field: c.field.to_string(),
        objects: c.objects.clone(),
        unit: c.unit,
        dual: c.dual.clone(),
        tensor: c.tensor.clone(),
        hom_dims: c.hom_dims.clone(),
        compose,
        tensor_mor,
        identity: c.id_vec.clone(),
        ev: c.ev.clone(),
        coev: c.coev.clone(),
        ev_tilde: c.ev_tilde.clone(),
        coev_tilde: c.coev_tilde.clone(),
        subcategories: c.subcategories.clone(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("datum serializes");
    s.push('\n');
    s
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses and shape-checks a datum. Axioms are not checked here.
pub fn from_json(text: &str) -> Result<CategoryDatum> {
    let file: DatumFile = serde_json::from_str(text).map_err(parse_error)?;
    if file.format != FORMAT_TAG {
        return Err(Error::Invalid(format!(
            "unsupported format tag {:?}, expected {FORMAT_TAG:?}",
            file.format
        )));
    }
    let field: Field = file.field.parse()?;
    let n = file.objects.len();
    let in_range = |i: usize| i < n;
    if !in_range(file.unit)
        || file.dual.len() != n
        || file.tensor.len() != n
        || file.hom_dims.len() != n
        || file.dual.iter().any(|&d| !in_range(d))
        || file
            .tensor
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&t| !in_range(t)))
        || file.hom_dims.iter().any(|r| r.len() != n)
    {
        return Err(Error::Shape(
            "object tables do not match the object list".into(),
        ));
    }
    let mut c = CategoryDatum::skeleton(
        &file.name,
        field,
        file.objects,
        file.unit,
        file.dual,
        file.tensor,
        file.hom_dims,
    );
    let h = |c: &CategoryDatum, a: usize, b: usize| c.hom_dims[a][b];
    for (a, b, cc, g, f, k, v) in file.compose {
        if ![a, b, cc].iter().all(|&x| in_range(x)) {
            return Err(Error::Shape(format!(
                "compose entry ({a},{b},{cc}) out of range"
            )));
        }
        let (hbc, hab, hac) = (h(&c, b, cc), h(&c, a, b), h(&c, a, cc));
        if g >= hbc || f >= hab || k >= hac {
            return Err(Error::Shape(format!(
                "compose entry ({a},{b},{cc},{g},{f},{k}) out of range"
            )));
        }
        let t = c.triple(a, b, cc);
        c.compose[t][(g * hab + f) * hac + k] = v;
    }
    for (i, i2, j, j2, f, g, k, v) in file.tensor_mor {
        if ![i, i2, j, j2].iter().all(|&x| in_range(x)) {
            return Err(Error::Shape(format!(
                "tensor entry ({i},{i2},{j},{j2}) out of range"
            )));
        }
        let hk = h(&c, c.tensor[i][j], c.tensor[i2][j2]);
        let (hii, hjj) = (h(&c, i, i2), h(&c, j, j2));
        if f >= hii || g >= hjj || k >= hk {
            return Err(Error::Shape(format!(
                "tensor entry ({i},{i2},{j},{j2},{f},{g},{k}) out of range"
            )));
        }
        let q = c.quad(i, i2, j, j2);
        c.tensor_mor[q][(f * hjj + g) * hk + k] = v;
    }
    c.id_vec = file.identity;
    c.ev = file.ev;
    c.coev = file.coev;
    c.ev_tilde = file.ev_tilde;
    c.coev_tilde = file.coev_tilde;
    c.subcategories = file.subcategories;
    for v in [&c.id_vec, &c.ev, &c.coev, &c.ev_tilde, &c.coev_tilde] {
        if v.len() != n {
            return Err(Error::Shape(
                "per-object vector lists must have one entry per object".into(),
            ));
        }
    }
    c.check_shapes()?;
    Ok(c)
}

pub fn read_datum(path: &Path) -> Result<CategoryDatum> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_datum(path: &Path, c: &CategoryDatum) -> Result<()> {
    std::fs::write(path, to_json(c))
        .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
}
