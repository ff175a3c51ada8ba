//! Cofinality spectra and symmetric completeness for ordered sets, ordered
//! abelian groups and ordered fields, with exact finite-support Hahn series
//! as a concrete model.

pub mod cardinals;
pub mod order_terms;
pub mod struct_classify;
pub mod error;
pub mod hahn_concrete;
pub mod oracle;
pub mod cli;

pub use error::{Error, Result};
