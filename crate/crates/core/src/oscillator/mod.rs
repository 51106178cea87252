//! Oscillator representation: flat Heisenberg models, the matrix-variable
//! models of the dual pairs, and the Fock → Schrödinger intertwiner.

pub mod heisenberg;
pub mod intertwine;
pub mod signature;
pub mod upq;

pub use signature::{Family, ModelTag, Signature};
