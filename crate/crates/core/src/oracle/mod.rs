//! Witness-based checks of spectrum claims on countable concrete chains.

mod chain;
mod cuts;
mod verify;

pub use chain::{ConcreteChain, Elem};
pub use cuts::{sides, CutDesc, CutWitness, Side};
pub use verify::{
    concretize, derive_cf, derive_ci, spectrum_soundness, verify_witness, Check, PairLine, SoundnessReport,
};
