use crate::catdata::pivotal::Pivotal;

/// The dual `f* : Y* → X*` of `f : X → Y`, built from `ev`/`coev`:
/// `(ev_Y ⊗ id_{X*}) ∘ (id_{Y*} ⊗ f ⊗ id_{X*}) ∘ (id_{Y*} ⊗ coev_X)`.
pub fn dual_mor<C: Pivotal>(c: &C, f: &C::Mor) -> C::Mor {
    let (x, y) = (c.src(f), c.dst(f));
    let (xs, ys) = (c.dual_obj(&x), c.dual_obj(&y));
    let id_xs = c.identity(&xs);
    let id_ys = c.identity(&ys);
    let step1 = c.tensor_mor(&id_ys, &c.coev(&x));
    let step2 = c.tensor_mor(&c.tensor_mor(&id_ys, f), &id_xs);
    let step3 = c.tensor_mor(&c.ev(&y), &id_xs);
    c.compose_all(&[step3, step2, step1])
}

/// The dual `f* : Y* → X*` built from `ẽv`/`c̃oev`:
/// `(id_{X*} ⊗ ẽv_Y) ∘ (id_{X*} ⊗ f ⊗ id_{Y*}) ∘ (c̃oev_X ⊗ id_{Y*})`.
pub fn dual_mor_tilde<C: Pivotal>(c: &C, f: &C::Mor) -> C::Mor {
    let (x, y) = (c.src(f), c.dst(f));
    let (xs, ys) = (c.dual_obj(&x), c.dual_obj(&y));
    let id_xs = c.identity(&xs);
    let id_ys = c.identity(&ys);
    let step1 = c.tensor_mor(&c.coev_tilde(&x), &id_ys);
    let step2 = c.tensor_mor(&c.tensor_mor(&id_xs, f), &id_ys);
    let step3 = c.tensor_mor(&id_xs, &c.ev_tilde(&y));
    c.compose_all(&[step3, step2, step1])
}
