//! Coends and ends of bifunctors over finite object lists.

mod bifunctor;
mod closure_check;
mod cylinder;

pub use bifunctor::{coend, end_dual, BasisAction, BifunctorPresentation, CoendResult};
pub use closure_check::{closure_invariance_check, ClosureVerdict};
pub use cylinder::{
    cylinder_hom, htr_compose, htr_hom, CylinderCoend, CylinderFunctor, DEFAULT_BUDGET,
};
