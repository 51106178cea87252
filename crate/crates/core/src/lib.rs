#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod export;
pub mod forms;
pub mod oscillator;
pub mod schur;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
