//! Exact computation of admissible skein modules, trace spaces and coends for
//! finitely presented pivotal categories.

pub mod catdata;
pub mod coend;
pub mod diagram;
pub mod error;
pub mod exactla;
pub mod skein;

pub use error::{Error, Result};
