//! Lattice enumeration, representation numbers, Whittaker factors and the
//! `E8` Eisenstein comparison. The only floating point in the crate lives in
//! [`whittaker`].

use std::sync::OnceLock;

pub mod eisenstein;
pub mod enumerate;
pub mod gram;
pub mod whittaker;

pub use eisenstein::{divisor_sum, eisenstein_check, eisenstein_check_with, EisensteinReport, EisensteinRow};
pub use enumerate::{enumerate_vectors, rep_numbers};
pub use gram::GramMatrix;
pub use whittaker::{fourier_assemble, weighted_counts, whittaker, BetaMatrix, Convention, WhittakerPoint};

pub const THREADS_ENV: &str = "THETA_FORMS_THREADS";

fn pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let n: usize = std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()
    })
    .as_ref()
}

/// Runs `f` on the pool capped by `THETA_FORMS_THREADS`, or the global pool.
pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match pool() {
        Some(p) => p.install(f),
        None => f(),
    }
}
