//! Partitions, semistandard tableaux, determinant polynomials and harmonic
//! highest weight vectors.

pub mod harmonic;
pub mod minors;
pub mod partition;
pub mod tableau;

pub use harmonic::{is_harmonic, laplacian, schur_span_dim};
pub use minors::{delta_t, kv_highest_weight, MinorSide};
pub use partition::Partition;
pub use tableau::{enumerate_ssyt, Tableau};
