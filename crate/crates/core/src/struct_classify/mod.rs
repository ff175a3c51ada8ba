//! Ordered abelian groups and ordered fields described by their value set,
//! archimedean components and a few structural flags.

mod classify;
mod descriptor;
mod extend;

pub use classify::{classify_discrete, classify_field, classify_group, cut_path, valuation_path, PathVerdict, Tri, Verdict};
pub use descriptor::{cf_m_gamma, Components, FieldDescriptor, GroupDescriptor, Residue};
pub use extend::{extend_field, extend_group};
