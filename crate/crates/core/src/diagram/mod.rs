//! Planar string-diagram words and their evaluation.

mod traces;
mod word;

pub use traces::{dims, ptr_l, ptr_r, trace_l, trace_r, unit_scalar};
pub use word::{
    collapse, evaluate, CapFlavor, Cell, CupFlavor, DiagramWord, Orientation, StrandType, Word,
};
