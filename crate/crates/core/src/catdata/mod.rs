//! Finite presentations of pivotal categories, validation and closures.

pub mod additive;
pub mod builders;
mod closure;
mod datum;
mod duality;
pub mod format;
mod pivotal;
pub mod supermod;
mod validate;

pub use closure::{ideal_closure, retract_witness, sum_witness, Leg, SumWitness};
pub use datum::{CategoryDatum, MorphismVec, ObjectId, SubcategoryRole, SubcategorySpec};
pub use duality::{dual_mor, dual_mor_tilde};
pub use pivotal::Pivotal;
pub use validate::{validate_category, validate_objects, AxiomFailure, ValidationReport};
