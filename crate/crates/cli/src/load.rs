use std::path::Path;

use skein_core::catdata::builders::{
    build_dual_numbers, build_graded_vect, build_graded_z3_zeta, build_trivial,
};
use skein_core::catdata::format::read_datum;
use skein_core::catdata::supermod::{build_exterior_smod, ModId, SuperModCategory};
use skein_core::catdata::{CategoryDatum, Pivotal};
use skein_core::exactla::Field;
use skein_core::{Error, Result};

pub const BUILTINS: &str = "trivial, graded:N, graded-z3, dual-numbers, exterior[:a,b,..]";

pub enum Source {
    Datum(CategoryDatum),
    Exterior(SuperModCategory, Vec<ModId>),
}

pub fn is_builtin(spec: &str) -> bool {
    let head = spec.split(':').next().unwrap_or(spec);
    matches!(
        head,
        "trivial" | "graded" | "graded-z3" | "dual-numbers" | "exterior"
    )
}

/// A builtin category name or a path to a category file.
pub fn load(spec: &str, field: Field) -> Result<Source> {
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    let datum = match (head, arg) {
        ("trivial", None) => build_trivial(field),
        ("graded", Some(n)) => {
            let n: usize = n
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Error::Invalid(format!("bad group order in '{spec}'")))?;
            build_graded_vect(n, &vec![field.one(); n])?
        }
        ("graded-z3", None) => build_graded_z3_zeta(field)?,
        ("dual-numbers", None) => build_dual_numbers(field),
        ("exterior", gens) => {
            let gens: Vec<&str> =
                gens.map_or(vec!["a", "b"], |g| g.split(',').map(str::trim).collect());
            let (cat, objs) = build_exterior_smod(field, &gens, Vec::new())?;
            return Ok(Source::Exterior(cat, objs));
        }
        _ if is_builtin(spec) => {
            return Err(Error::Invalid(format!(
                "bad builtin '{spec}' (known: {BUILTINS})"
            )))
        }
        _ => read_datum(Path::new(spec))?,
    };
    Ok(Source::Datum(datum))
}

/// A category together with the objects computations range over and named
/// object groups usable as subcategory selections.
pub struct Session<'a, C: Pivotal> {
    pub cat: &'a C,
    pub listed: Vec<C::Obj>,
    pub groups: Vec<(String, Vec<C::Obj>)>,
    /// Whether `listed` exhausts the category up to direct sums.
    pub complete: bool,
}

impl<'a> Session<'a, CategoryDatum> {
    pub fn datum(c: &'a CategoryDatum) -> Self {
        let groups = c
            .subcategories
            .iter()
            .map(|s| (s.name.clone(), s.members.clone()))
            .collect();
        Session {
            cat: c,
            listed: c.all_objects(),
            groups,
            complete: true,
        }
    }
}

impl<'a> Session<'a, SuperModCategory> {
    pub fn exterior(c: &'a SuperModCategory, objs: &[ModId]) -> Self {
        let proj = objs
            .iter()
            .copied()
            .filter(|o| c.name(*o).contains("Lambda"))
            .collect();
        Session {
            cat: c,
            listed: objs.to_vec(),
            groups: vec![("proj".to_string(), proj)],
            complete: false,
        }
    }
}

impl<C: Pivotal> Session<'_, C> {
    pub fn object(&self, name: &str) -> Result<C::Obj> {
        let name = name.trim();
        self.listed
            .iter()
            .find(|o| self.cat.obj_name(o) == name)
            .cloned()
            .ok_or_else(|| Error::Unknown(format!("object '{name}'")))
    }

    /// `all`, a named group, or a comma-separated list of object names.
    pub fn select(&self, sel: Option<&str>) -> Result<Vec<C::Obj>> {
        let Some(sel) = sel.map(str::trim) else {
            return Ok(self.listed.clone());
        };
        if sel == "all" {
            return Ok(self.listed.clone());
        }
        if let Some((_, members)) = self.groups.iter().find(|(n, _)| n == sel) {
            return Ok(members.clone());
        }
        sel.split(',').map(|n| self.object(n)).collect()
    }

    pub fn names(&self, objs: &[C::Obj]) -> String {
        let names: Vec<String> = objs.iter().map(|o| self.cat.obj_name(o)).collect();
        format!("{{{}}}", names.join(", "))
    }
}
