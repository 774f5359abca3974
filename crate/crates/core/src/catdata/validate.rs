//! Axiom checks for strict pivotal categories on hom bases.

use std::fmt;

use crate::catdata::datum::CategoryDatum;
use crate::catdata::duality::{dual_mor, dual_mor_tilde};
use crate::catdata::pivotal::Pivotal;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: usize,
    pub failure: Option<AxiomFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "pass ({} checks)", self.checks),
            Some(e) => write!(
                f,
                "fail: {} at {} (after {} checks)",
                e.axiom, e.witness, self.checks
            ),
        }
    }
}

struct Checker<'a, C: Pivotal> {
    c: &'a C,
    checks: usize,
}

type Step = std::result::Result<(), AxiomFailure>;

impl<C: Pivotal> Checker<'_, C> {
    fn eq(
        &mut self,
        axiom: &'static str,
        lhs: &C::Mor,
        rhs: &C::Mor,
        witness: impl FnOnce() -> String,
    ) -> Step {
        self.checks += 1;
        if self.c.mor_eq(lhs, rhs) {
            Ok(())
        } else {
            Err(AxiomFailure {
                axiom,
                witness: witness(),
            })
        }
    }
}

/// Shape check followed by the axioms over every listed object.
pub fn validate_category(c: &CategoryDatum) -> Result<ValidationReport> {
    c.check_shapes()?;
    let objs = c.all_objects();
    for (i, &d) in c.dual.iter().enumerate() {
        if c.dual[d] != i {
            return Ok(ValidationReport {
                checks: 0,
                failure: Some(AxiomFailure {
                    axiom: "duality involution",
                    witness: format!("{}** ≠ {}", c.objects[i], c.objects[i]),
                }),
            });
        }
    }
    Ok(validate_objects(c, &objs))
}

/// Checks the strict pivotal axioms on all basis morphisms between listed objects.
pub fn validate_objects<C: Pivotal>(c: &C, objs: &[C::Obj]) -> ValidationReport {
    let mut ch = Checker { c, checks: 0 };
    let res = run_all(&mut ch, objs);
    ValidationReport {
        checks: ch.checks,
        failure: res.err(),
    }
}

fn run_all<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    associativity(ch, objs)?;
    identities(ch, objs)?;
    tensor_laws(ch, objs)?;
    snakes(ch, objs)?;
    pivotal_naturality(ch, objs)?;
    duality_monoidal(ch, objs)?;
    structure_maps(ch, objs)
}

fn associativity<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    let c = ch.c;
    for a in objs {
        for b in objs {
            let fs = c.hom_basis(a, b);
            if fs.is_empty() {
                continue;
            }
            for cc in objs {
                let gs = c.hom_basis(b, cc);
                if gs.is_empty() {
                    continue;
                }
                for d in objs {
                    let hs = c.hom_basis(cc, d);
                    for (i, f) in fs.iter().enumerate() {
                        for (j, g) in gs.iter().enumerate() {
                            let gf = c.compose(g, f);
                            for (k, h) in hs.iter().enumerate() {
                                let lhs = c.compose(h, &gf);
                                let rhs = c.compose(&c.compose(h, g), f);
                                let w = || {
                                    format!(
                                        "h∘(g∘f) ≠ (h∘g)∘f for f = e{i}: {} → {}, g = e{j}: {} → {}, h = e{k}: {} → {}",
                                        c.obj_name(a), c.obj_name(b), c.obj_name(b), c.obj_name(cc), c.obj_name(cc), c.obj_name(d)
                                    )
                                };
                                ch.eq("composition associativity", &lhs, &rhs, w)?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn identities<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    let c = ch.c;
    for a in objs {
        for b in objs {
            for (i, f) in c.hom_basis(a, b).iter().enumerate() {
                let w = || format!("e{i}: {} → {}", c.obj_name(a), c.obj_name(b));
                ch.eq("left identity", &c.compose(&c.identity(b), f), f, w)?;
                let w = || format!("e{i}: {} → {}", c.obj_name(a), c.obj_name(b));
                ch.eq("right identity", &c.compose(f, &c.identity(a)), f, w)?;
            }
        }
    }
    Ok(())
}

fn tensor_laws<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    let c = ch.c;
    let unit = c.unit();
    let id1 = c.identity(&unit);
    for a in objs {
        let w = || format!("unit ⊗ {} and {} ⊗ unit", c.obj_name(a), c.obj_name(a));
        let ok = c.tensor_obj(&unit, a) == *a && c.tensor_obj(a, &unit) == *a;
        ch.checks += 1;
        if !ok {
            return Err(AxiomFailure {
                axiom: "strict unit",
                witness: w(),
            });
        }
        for b in objs {
            let ida = c.identity(a);
            let idb = c.identity(b);
            let w = || format!("id_{} ⊗ id_{}", c.obj_name(a), c.obj_name(b));
            ch.eq(
                "tensor of identities",
                &c.tensor_mor(&ida, &idb),
                &c.identity(&c.tensor_obj(a, b)),
                w,
            )?;
            for (i, f) in c.hom_basis(a, b).iter().enumerate() {
                let w = || {
                    format!(
                        "e{i}: {} → {} tensored with id_1",
                        c.obj_name(a),
                        c.obj_name(b)
                    )
                };
                ch.eq("unit tensor", &c.tensor_mor(f, &id1), f, w)?;
                let w = || {
                    format!(
                        "id_1 tensored with e{i}: {} → {}",
                        c.obj_name(a),
                        c.obj_name(b)
                    )
                };
                ch.eq("unit tensor", &c.tensor_mor(&id1, f), f, w)?;
            }
        }
    }
    for a in objs {
        for b in objs {
            let fs = c.hom_basis(a, b);
            if fs.is_empty() {
                continue;
            }
            for a2 in objs {
                for b2 in objs {
                    let gs = c.hom_basis(a2, b2);
                    let (ida2, idb2) = (c.identity(a2), c.identity(b2));
                    let (ida, idb) = (c.identity(a), c.identity(b));
                    for (i, f) in fs.iter().enumerate() {
                        for (j, g) in gs.iter().enumerate() {
                            let fg = c.tensor_mor(f, g);
                            let w = || {
                                format!(
                                    "f = e{i}: {} → {}, g = e{j}: {} → {}",
                                    c.obj_name(a),
                                    c.obj_name(b),
                                    c.obj_name(a2),
                                    c.obj_name(b2)
                                )
                            };
                            let lhs = c.compose(&c.tensor_mor(f, &idb2), &c.tensor_mor(&ida, g));
                            ch.eq("interchange", &lhs, &fg, w)?;
                            let w = || {
                                format!(
                                    "f = e{i}: {} → {}, g = e{j}: {} → {}",
                                    c.obj_name(a),
                                    c.obj_name(b),
                                    c.obj_name(a2),
                                    c.obj_name(b2)
                                )
                            };
                            let rhs = c.compose(&c.tensor_mor(&idb, g), &c.tensor_mor(f, &ida2));
                            ch.eq("interchange", &rhs, &fg, w)?;
                        }
                    }
                }
            }
        }
    }
    // functoriality of − ⊗ Z and Z ⊗ − on composable basis pairs
    for a in objs {
        for b in objs {
            let fs = c.hom_basis(a, b);
            if fs.is_empty() {
                continue;
            }
            for cc in objs {
                let gs = c.hom_basis(b, cc);
                for z in objs {
                    let idz = c.identity(z);
                    for (i, f) in fs.iter().enumerate() {
                        for (j, g) in gs.iter().enumerate() {
                            let gf = c.compose(g, f);
                            let w = || {
                                format!(
                                    "g = e{j}: {} → {} after f = e{i}: {} → {}, tensored with {}",
                                    c.obj_name(b),
                                    c.obj_name(cc),
                                    c.obj_name(a),
                                    c.obj_name(b),
                                    c.obj_name(z)
                                )
                            };
                            let lhs = c.compose(&c.tensor_mor(g, &idz), &c.tensor_mor(f, &idz));
                            ch.eq("tensor functoriality", &lhs, &c.tensor_mor(&gf, &idz), w)?;
                            let w = || {
                                format!(
                                    "{} tensored with g = e{j}: {} → {} after f = e{i}: {} → {}",
                                    c.obj_name(z),
                                    c.obj_name(b),
                                    c.obj_name(cc),
                                    c.obj_name(a),
                                    c.obj_name(b)
                                )
                            };
                            let lhs = c.compose(&c.tensor_mor(&idz, g), &c.tensor_mor(&idz, f));
                            ch.eq("tensor functoriality", &lhs, &c.tensor_mor(&idz, &gf), w)?;
                        }
                    }
                }
            }
        }
    }
    // associativity of ⊗ on morphisms
    for a in objs {
        for b in objs {
            for cc in objs {
                let ab = c.tensor_obj(a, b);
                let bc = c.tensor_obj(b, cc);
                ch.checks += 1;
                if c.tensor_obj(&ab, cc) != c.tensor_obj(a, &bc) {
                    return Err(AxiomFailure {
                        axiom: "tensor associativity",
                        witness: format!(
                            "({}⊗{})⊗{} ≠ {}⊗({}⊗{})",
                            c.obj_name(a),
                            c.obj_name(b),
                            c.obj_name(cc),
                            c.obj_name(a),
                            c.obj_name(b),
                            c.obj_name(cc)
                        ),
                    });
                }
            }
        }
    }
    for a in objs {
        for a2 in objs {
            let fs = c.hom_basis(a, a2);
            for b in objs {
                for b2 in objs {
                    let gs = c.hom_basis(b, b2);
                    if fs.is_empty() || gs.is_empty() {
                        continue;
                    }
                    for cc in objs {
                        for c2 in objs {
                            for (k, h) in c.hom_basis(cc, c2).iter().enumerate() {
                                for (i, f) in fs.iter().enumerate() {
                                    for (j, g) in gs.iter().enumerate() {
                                        let lhs = c.tensor_mor(&c.tensor_mor(f, g), h);
                                        let rhs = c.tensor_mor(f, &c.tensor_mor(g, h));
                                        let w = || {
                                            format!(
                                                "e{i}: {} → {}, e{j}: {} → {}, e{k}: {} → {}",
                                                c.obj_name(a),
                                                c.obj_name(a2),
                                                c.obj_name(b),
                                                c.obj_name(b2),
                                                c.obj_name(cc),
                                                c.obj_name(c2)
                                            )
                                        };
                                        ch.eq("tensor associativity", &lhs, &rhs, w)?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn snakes<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    let c = ch.c;
    for x in objs {
        let xs = c.dual_obj(x);
        let (idx, idxs) = (c.identity(x), c.identity(&xs));
        let s1 = c.compose(
            &c.tensor_mor(&idx, &c.ev(x)),
            &c.tensor_mor(&c.coev(x), &idx),
        );
        ch.eq("snake (ev, coev) on X", &s1, &idx, || c.obj_name(x))?;
        let s2 = c.compose(
            &c.tensor_mor(&c.ev(x), &idxs),
            &c.tensor_mor(&idxs, &c.coev(x)),
        );
        ch.eq("snake (ev, coev) on X*", &s2, &idxs, || c.obj_name(x))?;
        let s3 = c.compose(
            &c.tensor_mor(&c.ev_tilde(x), &idx),
            &c.tensor_mor(&idx, &c.coev_tilde(x)),
        );
        ch.eq("snake (ev_tilde, coev_tilde) on X", &s3, &idx, || {
            c.obj_name(x)
        })?;
        let s4 = c.compose(
            &c.tensor_mor(&idxs, &c.ev_tilde(x)),
            &c.tensor_mor(&c.coev_tilde(x), &idxs),
        );
        ch.eq("snake (ev_tilde, coev_tilde) on X*", &s4, &idxs, || {
            c.obj_name(x)
        })?;
    }
    Ok(())
}

fn pivotal_naturality<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    let c = ch.c;
    for a in objs {
        for b in objs {
            for (i, f) in c.hom_basis(a, b).iter().enumerate() {
                let w = || format!("e{i}: {} → {}", c.obj_name(a), c.obj_name(b));
                ch.eq(
                    "pivotal naturality",
                    &dual_mor(c, f),
                    &dual_mor_tilde(c, f),
                    w,
                )?;
            }
        }
    }
    Ok(())
}

fn duality_monoidal<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    let c = ch.c;
    for a in objs {
        for b in objs {
            let ab = c.tensor_obj(a, b);
            let (as_, bs) = (c.dual_obj(a), c.dual_obj(b));
            if !c.strict_dual_of_tensor(a, b) {
                continue;
            }
            let (ida, idb, idas, idbs) = (
                c.identity(a),
                c.identity(b),
                c.identity(&as_),
                c.identity(&bs),
            );
            let w = || format!("{} ⊗ {}", c.obj_name(a), c.obj_name(b));
            let ev = c.compose(
                &c.ev(b),
                &c.tensor_mor(&c.tensor_mor(&idbs, &c.ev(a)), &idb),
            );
            ch.eq("duality monoidal (ev)", &c.ev(&ab), &ev, w)?;
            let coev = c.compose(
                &c.tensor_mor(&c.tensor_mor(&ida, &c.coev(b)), &idas),
                &c.coev(a),
            );
            ch.eq("duality monoidal (coev)", &c.coev(&ab), &coev, w)?;
            let evt = c.compose(
                &c.ev_tilde(a),
                &c.tensor_mor(&c.tensor_mor(&ida, &c.ev_tilde(b)), &idas),
            );
            ch.eq("duality monoidal (ev_tilde)", &c.ev_tilde(&ab), &evt, w)?;
            let coevt = c.compose(
                &c.tensor_mor(&c.tensor_mor(&idbs, &c.coev_tilde(a)), &idb),
                &c.coev_tilde(b),
            );
            ch.eq(
                "duality monoidal (coev_tilde)",
                &c.coev_tilde(&ab),
                &coevt,
                w,
            )?;
        }
    }
    Ok(())
}

fn structure_maps<C: Pivotal>(ch: &mut Checker<'_, C>, objs: &[C::Obj]) -> Step {
    let c = ch.c;
    for x in objs {
        for (what, m) in [
            ("ev", c.ev(x)),
            ("coev", c.coev(x)),
            ("ev_tilde", c.ev_tilde(x)),
            ("coev_tilde", c.coev_tilde(x)),
        ] {
            ch.checks += 1;
            if !c.is_morphism(&m) {
                return Err(AxiomFailure {
                    axiom: "structure map is a morphism",
                    witness: format!("{what} of {}", c.obj_name(x)),
                });
            }
        }
    }
    Ok(())
}
