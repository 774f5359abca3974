use crate::catdata::Pivotal;
use crate::error::{Error, Result};
use crate::exactla::{solve, Matrix, Scalar};

fn expect_hom<C: Pivotal>(c: &C, f: &C::Mor, src: &C::Obj, dst: &C::Obj) -> Result<()> {
    if c.src(f) != *src || c.dst(f) != *dst {
        return Err(Error::Factorization(format!(
            "morphism {} → {} is not of the form {} → {}",
            c.obj_name(&c.src(f)),
            c.obj_name(&c.dst(f)),
            c.obj_name(src),
            c.obj_name(dst)
        )));
    }
    Ok(())
}

/// Left partial trace over `v` of `f : V⊗W → V⊗W′`:
/// `(ev_V ⊗ id_{W′}) ∘ (id_{V*} ⊗ f) ∘ (c̃oev_V ⊗ id_W)`.
pub fn ptr_l<C: Pivotal>(c: &C, f: &C::Mor, v: &C::Obj, w: &C::Obj, w2: &C::Obj) -> Result<C::Mor> {
    expect_hom(c, f, &c.tensor_obj(v, w), &c.tensor_obj(v, w2))?;
    let vs = c.dual_obj(v);
    let open = c.tensor_mor(&c.coev_tilde(v), &c.identity(w));
    let mid = c.tensor_mor(&c.identity(&vs), f);
    let close = c.tensor_mor(&c.ev(v), &c.identity(w2));
    Ok(c.compose_all(&[close, mid, open]))
}

/// Right partial trace over `v` of `g : W⊗V → W′⊗V`:
/// `(id_{W′} ⊗ ẽv_V) ∘ (g ⊗ id_{V*}) ∘ (id_W ⊗ coev_V)`.
pub fn ptr_r<C: Pivotal>(c: &C, g: &C::Mor, v: &C::Obj, w: &C::Obj, w2: &C::Obj) -> Result<C::Mor> {
    expect_hom(c, g, &c.tensor_obj(w, v), &c.tensor_obj(w2, v))?;
    let vs = c.dual_obj(v);
    let open = c.tensor_mor(&c.identity(w), &c.coev(v));
    let mid = c.tensor_mor(g, &c.identity(&vs));
    let close = c.tensor_mor(&c.identity(w2), &c.ev_tilde(v));
    Ok(c.compose_all(&[close, mid, open]))
}

/// Left trace `ev ∘ (id ⊗ f) ∘ c̃oev` of an endomorphism, as a scalar.
pub fn trace_l<C: Pivotal>(c: &C, f: &C::Mor) -> Result<Scalar> {
    let u = c.unit();
    let x = c.src(f);
    let m = ptr_l(c, f, &x, &u, &u)?;
    unit_scalar(c, &m)
}

/// Right trace `ẽv ∘ (f ⊗ id) ∘ coev` of an endomorphism, as a scalar.
pub fn trace_r<C: Pivotal>(c: &C, f: &C::Mor) -> Result<Scalar> {
    let u = c.unit();
    let x = c.src(f);
    let m = ptr_r(c, f, &x, &u, &u)?;
    unit_scalar(c, &m)
}

/// `(dim_l X, dim_r X)`.
pub fn dims<C: Pivotal>(c: &C, x: &C::Obj) -> Result<(Scalar, Scalar)> {
    let id = c.identity(x);
    Ok((trace_l(c, &id)?, trace_r(c, &id)?))
}

/// The scalar `s` with `m = s·id_1`; fails if `m` is not a multiple of the identity.
pub fn unit_scalar<C: Pivotal>(c: &C, m: &C::Mor) -> Result<Scalar> {
    let u = c.unit();
    if c.src(m) != u || c.dst(m) != u {
        return Err(Error::Factorization(
            "not an endomorphism of the unit".into(),
        ));
    }
    let id = c.embed(&c.identity(&u));
    let v = c.embed(m);
    let a = Matrix::column(c.field(), id);
    solve(&a, &v)?
        .map(|x| x[0].clone())
        .ok_or_else(|| Error::Invalid("endomorphism of the unit is not a scalar".into()))
}
