//! Special forms and the relative Lie algebra complex they live in.

pub mod cochain;
pub mod differential;
pub mod fock;
pub mod km;
pub mod mixed;
pub mod restrict;

pub use cochain::GKCochain;
pub use differential::{gk_differential, k_invariance_residual};
pub use fock::{build_psi_cup, build_psi_orth, build_psi_q};
pub use km::{build_km_explicit, build_km_nabla, euler_chern_form};
pub use mixed::build_mixed;
pub use restrict::{restrict_form, SplitSpec};
